#include "tokenlab/primitives.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace tokenlab::primitives {

Bytes sha256(const Bytes& data) {
    Bytes digest(32);
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != 32)
        throw std::runtime_error("sha256 failed");
    return digest;
}

namespace {

Bytes tagged_hash(const std::string& tag, std::initializer_list<const Bytes*> parts) {
    ByteWriter w;
    w.blob(Bytes(tag.begin(), tag.end()));
    for (const Bytes* p : parts) w.blob(*p);
    return sha256(w.take());
}

class StandinSuite final : public PrimitiveSuite {
public:
    std::string name() const override { return "standin"; }

    CommitResult commit(const Crs& crs, const Bytes& msg, Prg& rng) const override {
        CommitResult r;
        r.opening = rng.bytes(32);
        r.commitment = tagged_hash("commit", {&crs.bytes, &msg, &r.opening});
        return r;
    }

    bool verify_open(const Crs& crs, const Bytes& commitment, const Bytes& msg,
                     const Bytes& opening) const override {
        return commitment == tagged_hash("commit", {&crs.bytes, &msg, &opening});
    }

    SignatureKeys keygen(Prg& rng) const override {
        Bytes key = rng.bytes(32);
        return {key, key};  // MAC: both sides hold the same key
    }

    Bytes sign(const Bytes& signing_key, const Bytes& msg) const override {
        return tagged_hash("mac", {&signing_key, &msg});
    }

    bool verify(const Bytes& verification_key, const Bytes& msg, const Bytes& sig) const override {
        return sig == tagged_hash("mac", {&verification_key, &msg});
    }
};

}  // namespace

const PrimitiveSuite& standin_suite() {
    static const StandinSuite suite;
    return suite;
}

const PrimitiveSuite& suite_by_name(const std::string& name) {
    if (name == "standin") return standin_suite();
    throw std::invalid_argument("unknown primitive suite: " + name);
}

Crs derive_crs(const gf2::BitVector& m) {
    ByteWriter w;
    w.bitvec(m);
    const Bytes seed = w.take();
    return Crs{tagged_hash("crs", {&seed})};
}

Bytes ot_transfer(const Crs& crs, const OtOffer& offer, bool choice) {
    (void)crs;  // the trusted stand-in has no transcript to bind
    return choice ? offer.x1 : offer.x0;
}

}  // namespace tokenlab::primitives
