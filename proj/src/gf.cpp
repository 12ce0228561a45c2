#include "irsdec/gf.hpp"

#include <stdexcept>
#include <string>

namespace irsdec {

Field::Field(int bits, uint32_t primitive_poly)
    : bits_(bits), q_(1u << bits), poly_(primitive_poly) {
    if (bits < 2 || bits > 16)
        throw std::invalid_argument("field bits must be in [2, 16]");
    if ((primitive_poly >> bits) != 1u)
        throw std::invalid_argument("primitive_poly must have degree exactly " +
                                    std::to_string(bits));

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);

    // Walk the cycle of alpha = x. Any repeated value before covering all
    // q-1 nonzero elements means the polynomial is not primitive.
    uint32_t cur = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        if (log_[cur] != -1)
            throw std::invalid_argument("primitive_poly is not primitive");
        exp_[i] = static_cast<uint16_t>(cur);
        log_[cur] = static_cast<int32_t>(i);
        cur <<= 1;
        if (cur & q_) cur ^= poly_;
    }
    if (cur != 1)
        throw std::invalid_argument("primitive_poly is not primitive");
    for (uint32_t i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
}

uint16_t Field::inv(uint16_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(2^w)");
    return exp_[(q_ - 1) - log_[a]];
}

uint16_t Field::pow(uint16_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t le = (e % (q_ - 1)) * static_cast<uint64_t>(log_[a]);
    return exp_[le % (q_ - 1)];
}

int Field::log(uint16_t a) const {
    if (a == 0) throw std::domain_error("log of zero in GF(2^w)");
    return log_[a];
}

uint32_t default_primitive_poly(int bits) {
    switch (bits) {
        case 2: return 0x7;
        case 3: return 0xB;
        case 4: return 0x13;
        case 5: return 0x25;
        case 6: return 0x43;
        case 7: return 0x89;
        case 8: return 0x11D;
        case 9: return 0x211;
        case 10: return 0x409;
        case 11: return 0x805;
        case 12: return 0x1053;
        case 13: return 0x201B;
        case 14: return 0x4443;
        case 15: return 0x8003;
        case 16: return 0x1100B;
        default:
            throw std::invalid_argument("no default polynomial for w = " +
                                        std::to_string(bits));
    }
}

const Field& default_field() {
    static const Field f(8, 0x11D);
    return f;
}

}  // namespace irsdec
