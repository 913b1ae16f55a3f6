#include "groupwidth/field.hpp"

#include <charconv>

#include "groupwidth/error.hpp"

namespace gw {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (!is_prime(p)) throw Error(ErrorCode::BadField, std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "Q" || text == "q") return rationals();
    std::string_view digits = text;
    if (digits.starts_with("Fp:")) {
        digits.remove_prefix(3);
    } else if (digits.starts_with("Fp")) {
        digits.remove_prefix(2);
    } else if (digits.starts_with("F") || digits.starts_with("f")) {
        digits.remove_prefix(1);
    }
    std::uint32_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
        throw Error(ErrorCode::BadField, "cannot parse field '" + std::string(text) + "'");
    }
    return prime(p);
}

std::string FieldSpec::to_string() const
{
    if (is_rational()) return "Q";
    return "Fp:" + std::to_string(characteristic_);
}

}  // namespace gw
