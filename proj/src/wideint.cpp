#include <algorithm>
#include <bit>
#include <string>

#include "apsp/matmul.hpp"

namespace apsp {

using u128 = unsigned __int128;

WideInt::WideInt(std::uint64_t value) {
    if (value != 0) {
        limbs_.push_back(value);
    }
}

WideInt WideInt::power_of_two(std::size_t bit) {
    WideInt out;
    out.add_power_of_two(bit);
    return out;
}

void WideInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

std::optional<std::size_t> WideInt::log2_exact() const {
    if (limbs_.empty() || std::popcount(limbs_.back()) != 1) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i) {
        if (limbs_[i] != 0) {
            return std::nullopt;
        }
    }
    return (limbs_.size() - 1) * 64 + static_cast<std::size_t>(std::countr_zero(limbs_.back()));
}

std::size_t WideInt::bit_length() const {
    if (limbs_.empty()) {
        return 0;
    }
    return (limbs_.size() - 1) * 64 + static_cast<std::size_t>(std::bit_width(limbs_.back()));
}

std::uint64_t WideInt::field(std::size_t offset, std::size_t width) const {
    const std::size_t limb = offset / 64;
    const std::size_t bit = offset % 64;
    if (width == 0 || limb >= limbs_.size()) {
        return 0;
    }
    std::uint64_t out = limbs_[limb] >> bit;
    if (bit != 0 && bit + width > 64 && limb + 1 < limbs_.size()) {
        out |= limbs_[limb + 1] << (64 - bit);
    }
    if (width < 64) {
        out &= (std::uint64_t{1} << width) - 1;
    }
    return out;
}

void WideInt::add_at_limb(std::size_t limb, std::uint64_t value) {
    if (value == 0) {
        return;
    }
    if (limbs_.size() <= limb) {
        limbs_.resize(limb + 1, 0);
    }
    std::uint64_t carry = value;
    for (std::size_t i = limb; carry != 0; ++i) {
        if (i == limbs_.size()) {
            limbs_.push_back(carry);
            break;
        }
        const std::uint64_t before = limbs_[i];
        limbs_[i] = before + carry;
        carry = limbs_[i] < before ? 1 : 0;
    }
}

void WideInt::add_power_of_two(std::size_t bit) {
    add_at_limb(bit / 64, std::uint64_t{1} << (bit % 64));
}

void WideInt::add_shifted(const WideInt& value, std::size_t shift) {
    if (value.is_zero()) {
        return;
    }
    const std::size_t base = shift / 64;
    const std::size_t bit = shift % 64;
    const std::size_t need = base + value.limbs_.size() + 1;
    if (limbs_.size() < need) {
        limbs_.resize(need, 0);
    }
    u128 carry = 0;
    std::size_t i = 0;
    for (; i < value.limbs_.size(); ++i) {
        const u128 shifted = static_cast<u128>(value.limbs_[i]) << bit;
        const u128 sum = static_cast<u128>(limbs_[base + i]) + static_cast<std::uint64_t>(shifted) + carry;
        limbs_[base + i] = static_cast<std::uint64_t>(sum);
        carry = (sum >> 64) + (shifted >> 64);
    }
    if (carry != 0) {
        add_at_limb(base + i, static_cast<std::uint64_t>(carry));
    }
    trim();
}

void WideInt::add_product(const WideInt& a, const WideInt& b) {
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    if (auto e = a.log2_exact()) {
        add_shifted(b, *e);
        return;
    }
    if (auto e = b.log2_exact()) {
        add_shifted(a, *e);
        return;
    }
    const std::size_t need = a.limbs_.size() + b.limbs_.size() + 1;
    if (limbs_.size() < need) {
        limbs_.resize(need, 0);
    }
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            const u128 t = static_cast<u128>(a.limbs_[i]) * b.limbs_[j] + limbs_[i + j] + carry;
            limbs_[i + j] = static_cast<std::uint64_t>(t);
            carry = static_cast<std::uint64_t>(t >> 64);
        }
        add_at_limb(i + b.limbs_.size(), carry);
    }
    trim();
}

WideInt& WideInt::operator+=(const WideInt& other) {
    add_shifted(other, 0);
    return *this;
}

WideInt operator*(const WideInt& a, const WideInt& b) {
    WideInt out;
    out.add_product(a, b);
    return out;
}

std::optional<std::uint64_t> WideInt::to_uint64() const {
    if (limbs_.size() > 1) {
        return std::nullopt;
    }
    return limbs_.empty() ? 0 : limbs_[0];
}

WideIntMatrix wideint_mm(const WideIntMatrix& a, const WideIntMatrix& b) {
    if (a.cols != b.rows) {
        throw InputError("wideint_mm: inner dimensions " + std::to_string(a.cols) + " and " +
                         std::to_string(b.rows) + " differ");
    }
    auto check_limit = [](const WideIntMatrix& m, const char* which) {
        if (m.bit_limit == 0) {
            return;
        }
        for (const auto& x : m.entries) {
            if (x.bit_length() > m.bit_limit) {
                throw InputError(std::string("wideint_mm: entry of ") + which + " exceeds declared bit limit");
            }
        }
    };
    check_limit(a, "A");
    check_limit(b, "B");

    constexpr std::size_t kZero = static_cast<std::size_t>(-1);
    constexpr std::size_t kGeneral = static_cast<std::size_t>(-2);
    auto classify = [](const WideInt& x) {
        if (x.is_zero()) {
            return kZero;
        }
        auto e = x.log2_exact();
        return e ? *e : kGeneral;
    };
    std::vector<std::size_t> ea(a.entries.size());
    std::vector<std::size_t> eb(b.entries.size());
    std::transform(a.entries.begin(), a.entries.end(), ea.begin(), classify);
    std::transform(b.entries.begin(), b.entries.end(), eb.begin(), classify);

    WideIntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const std::size_t xa = ea[i * a.cols + k];
            if (xa == kZero) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols; ++j) {
                const std::size_t xb = eb[k * b.cols + j];
                if (xb == kZero) {
                    continue;
                }
                WideInt& acc = c(i, j);
                if (xa != kGeneral && xb != kGeneral) {
                    acc.add_power_of_two(xa + xb);
                } else {
                    acc.add_product(a(i, k), b(k, j));
                }
            }
        }
    }
    return c;
}

} // namespace apsp
