#ifndef EXCALG_SCALAR_HPP
#define EXCALG_SCALAR_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace excalg {

/*
 * Exact scalar types.
 *
 * Rat : arbitrary-precision rational (GMP mpq, always canonicalized).
 * Fp  : prime field Z/p with a runtime modulus p > 3 (the constructions
 *       divide by 2 and 3, so characteristic 2 and 3 are rejected).
 *
 * Both types model the same concept: default-constructed zero, +, -, *,
 * exact division, equality, is_zero, inverse, and a lossless string form.
 */

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) { v_.canonicalize(); }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat from_int(long n) { return Rat(n); }
    static const char* field_name() { return "Q"; }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool is_zero() const { return v_ == 0; }
    Rat inv() const { return Rat(1) / *this; }

    // Exact decimal string "p/q" (or "p" when q = 1); round-trips losslessly.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    static Rat parse(const std::string& s) {
        mpq_class q(s);
        q.canonicalize();
        return Rat(q);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

class Fp {
public:
    // The modulus is process-global: one prime field per run (CLI smoke mode).
    static void set_modulus(std::uint64_t p) {
        if (p <= 3) throw std::invalid_argument("Fp: modulus must exceed 3");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("Fp: modulus must be prime");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    Fp() : v_(0) {}
    Fp(long n) {
        long r = n % static_cast<long>(modulus_);
        if (r < 0) r += static_cast<long>(modulus_);
        v_ = static_cast<std::uint64_t>(r);
    }

    static Fp from_int(long n) { return Fp(n); }
    static const char* field_name() { return "Fp"; }

    Fp operator+(const Fp& o) const { return raw(add(v_, o.v_)); }
    Fp operator-(const Fp& o) const { return raw(sub(v_, o.v_)); }
    Fp operator*(const Fp& o) const { return raw(mul(v_, o.v_)); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { v_ = add(v_, o.v_); return *this; }
    Fp& operator-=(const Fp& o) { v_ = sub(v_, o.v_); return *this; }
    Fp& operator*=(const Fp& o) { v_ = mul(v_, o.v_); return *this; }

    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }
    bool is_zero() const { return v_ == 0; }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        return pow(*this, modulus_ - 2);
    }

    std::string str() const { return std::to_string(v_); }
    static Fp parse(const std::string& s) { return Fp(std::stol(s)); }

    std::uint64_t value() const { return v_; }

private:
    static Fp raw(std::uint64_t v) { Fp r; r.v_ = v; return r; }
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    static std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
        return a >= b ? a - b : a + modulus_ - b;
    }
    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % modulus_);
    }
    static Fp pow(Fp b, std::uint64_t e) {
        Fp r(1);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::uint64_t v_;
    inline static std::uint64_t modulus_ = 10007;
};

} // namespace excalg

#endif // EXCALG_SCALAR_HPP
