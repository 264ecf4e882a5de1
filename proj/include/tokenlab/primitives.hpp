#pragma once

#include <string>

#include "tokenlab/gf2.hpp"
#include "tokenlab/message.hpp"
#include "tokenlab/prg.hpp"
#include "tokenlab/token_runtime.hpp"

namespace tokenlab::primitives {

Bytes sha256(const Bytes& data);

// Common reference string derived deterministically from the coin-toss
// result; both parties expand the same seed to the same 32 bytes.
struct Crs {
    Bytes bytes;

    bool operator==(const Crs& rhs) const { return bytes == rhs.bytes; }
};

Crs derive_crs(const gf2::BitVector& m);

struct CommitResult {
    Bytes commitment;
    Bytes opening;
};

struct SignatureKeys {
    Bytes signing;
    Bytes verification;
};

// The interface the computational protocols program against. Any suite
// with correct commit/open, OT and signature behaviour slots in; the
// protocols themselves never look behind it.
class PrimitiveSuite {
public:
    virtual ~PrimitiveSuite() = default;
    virtual std::string name() const = 0;

    virtual CommitResult commit(const Crs& crs, const Bytes& msg, Prg& rng) const = 0;
    virtual bool verify_open(const Crs& crs, const Bytes& commitment, const Bytes& msg,
                             const Bytes& opening) const = 0;

    virtual SignatureKeys keygen(Prg& rng) const = 0;
    virtual Bytes sign(const Bytes& signing_key, const Bytes& msg) const = 0;
    virtual bool verify(const Bytes& verification_key, const Bytes& msg, const Bytes& sig) const = 0;
};

// Desk-scale stand-in suite: salted-hash commitments and a keyed MAC
// as the signature (sound here because the token maker hardwires the
// verification key). Deliberately not a UC-secure instantiation; the
// repository's claims about the computational protocols are correctness
// and protocol-logic experiments, not cryptographic proofs.
const PrimitiveSuite& standin_suite();

// Lookup by CLI name; throws on unknown names.
const PrimitiveSuite& suite_by_name(const std::string& name);

// Trusted one-out-of-two exchange standing in for the OT subprotocol:
// the sender hands over both payloads and the interface gives it no way
// to observe `choice`.
Bytes ot_transfer(const Crs& crs, const OtOffer& offer, bool choice);

}  // namespace tokenlab::primitives
