#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <random>
#include <string>

namespace sl3 {

// Exact rational numbers.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static constexpr const char* name = "Q";
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(q_) == 0; }
    Rational inverse() const;
    std::string str() const;
    const mpq_class& value() const { return q_; }

    // Small integers keep coefficient growth modest.
    template <class Rng>
    static Rational random(Rng& rng) {
        std::uniform_int_distribution<long> d(-5, 5);
        return Rational(d(rng));
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ / b.q_)); }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

private:
    mpq_class q_;
};

// Integers modulo a prime. The modulus is process-wide so that values need no
// per-element tag; change it only between computations.
class Fp {
public:
    Fp() = default;
    Fp(long v);

    static constexpr const char* name = "Fp";
    static std::uint32_t modulus() { return modulus_.load(std::memory_order_relaxed); }
    static void set_modulus(std::uint32_t p);
    static Fp parse(const std::string& s);

    bool is_zero() const { return v_ == 0; }
    Fp inverse() const;
    std::string str() const { return std::to_string(v_); }
    std::uint32_t value() const { return v_; }

    template <class Rng>
    static Fp random(Rng& rng) {
        std::uniform_int_distribution<std::uint32_t> d(0, modulus() - 1);
        Fp r;
        r.v_ = d(rng);
        return r;
    }

    friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + std::uint64_t(b.v_)) % modulus()); }
    friend Fp operator-(Fp a, Fp b) { return raw((a.v_ + std::uint64_t(modulus()) - b.v_) % modulus()); }
    friend Fp operator*(Fp a, Fp b) { return raw(std::uint64_t(a.v_) * b.v_ % modulus()); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }

private:
    static Fp raw(std::uint64_t v) {
        Fp r;
        r.v_ = static_cast<std::uint32_t>(v);
        return r;
    }
    std::uint32_t v_ = 0;
    static std::atomic<std::uint32_t> modulus_;
};

// Sets the Fp modulus for the lifetime of the scope.
class ModulusScope {
public:
    explicit ModulusScope(std::uint32_t p) : saved_(Fp::modulus()) { Fp::set_modulus(p); }
    ~ModulusScope() { Fp::set_modulus(saved_); }
    ModulusScope(const ModulusScope&) = delete;
    ModulusScope& operator=(const ModulusScope&) = delete;

private:
    std::uint32_t saved_;
};

template <class K, class Rng>
K random_nonzero(Rng& rng) {
    for (;;) {
        K k = K::random(rng);
        if (!k.is_zero()) return k;
    }
}

}  // namespace sl3
