#include "mesur/inference/keys.hpp"

#include <openssl/evp.h>

#include "mesur/error.hpp"
#include "mesur/store/triple_store.hpp"

namespace mesur::inference {

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xf];
    }
    return out;
}

rdf::Term keyed_blank(std::string_view key) {
    // 128 bits is plenty for the number of aggregate nodes a store holds
    return rdf::Term::blank(std::string(store::kGeneratedBlankPrefix) + "k" + sha256_hex(key).substr(0, 32));
}

}  // namespace mesur::inference
