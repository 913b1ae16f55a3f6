#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gw {

/// Coefficient field: the rationals or a prime field F_p.
class FieldSpec {
public:
    static FieldSpec rationals() noexcept { return FieldSpec(0); }

    /// Throws Error(BadField) unless p is prime.
    static FieldSpec prime(std::uint32_t p);

    /// Accepts "Q", "F<p>", "Fp:<p>" and "Fp<p>".
    static FieldSpec parse(std::string_view text);

    bool is_rational() const noexcept { return characteristic_ == 0; }

    /// 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return characteristic_; }

    /// "Q" or "Fp:<p>", the form used in reports.
    std::string to_string() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(std::uint32_t characteristic) noexcept : characteristic_(characteristic) {}

    std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace gw
