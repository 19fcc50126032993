#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poset.hpp"

namespace affinv {

// GF(p^k). An element is the integer whose base-p digits are the
// coefficients of its residue polynomial, constant term first.
class SmallField {
public:
    SmallField(int p, int k, std::int64_t cap = std::int64_t(1) << 20) : p_(p), k_(k) {
        if (!is_prime(p) || k < 1) throw InvalidParams("field needs prime p and degree k >= 1");
        std::int64_t q = checked_pow(p, k);
        if (q > cap) throw CapExceeded("field of order " + std::to_string(q) + " exceeds the cap");
        q_ = static_cast<int>(q);
        modulus_ = least_irreducible();
        build_tables();
    }

    int p() const { return p_; }
    int degree() const { return k_; }
    int order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    int generator() const { return exp_[1]; }

    int add(int a, int b) const {
        if (p_ == 2) return a ^ b;
        int r = 0, w = 1;
        while (a || b) {
            r += ((a % p_ + b % p_) % p_) * w;
            a /= p_;
            b /= p_;
            w *= p_;
        }
        return r;
    }
    int neg(int a) const {
        int r = 0, w = 1;
        while (a) {
            r += ((p_ - a % p_) % p_) * w;
            a /= p_;
            w *= p_;
        }
        return r;
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    int inv(int a) const {
        if (a == 0) throw OutOfRange("zero has no inverse");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    // g^j for the fixed primitive element g.
    int power_of_generator(std::int64_t j) const { return exp_[static_cast<size_t>(floor_mod(j, q_ - 1))]; }
    int log(int a) const {
        if (a == 0) throw OutOfRange("zero has no logarithm");
        return log_[a];
    }
    int pow(int a, std::uint64_t s) const {
        if (s == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<size_t>((static_cast<std::uint64_t>(log_[a]) * (s % (q_ - 1))) % (q_ - 1))];
    }

    // 0 followed by g^0, g^1, ..., g^(q-2).
    std::vector<int> elements() const {
        std::vector<int> v{0};
        for (int j = 0; j < q_ - 1; ++j) v.push_back(exp_[j]);
        return v;
    }

private:
    int p_, k_, q_ = 0;
    std::vector<int> modulus_; // k+1 coefficients, monic
    std::vector<int> exp_, log_;

    std::vector<int> digits(int a, int len) const {
        std::vector<int> d(len, 0);
        for (int i = 0; i < len && a; ++i, a /= p_) d[i] = a % p_;
        return d;
    }

    // remainder of a modulo monic f, both as coefficient lists
    std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& f) const {
        const int df = static_cast<int>(f.size()) - 1;
        for (int i = static_cast<int>(a.size()) - 1; i >= df; --i) {
            int c = a[i] % p_;
            if (!c) continue;
            for (int j = 0; j <= df; ++j) a[i - df + j] = ((a[i - df + j] - c * f[j]) % p_ + p_) % p_;
        }
        a.resize(std::max(df, 0));
        return a;
    }

    bool irreducible(const std::vector<int>& f) const {
        const int k = static_cast<int>(f.size()) - 1;
        for (int d = 1; 2 * d <= k; ++d) {
            std::int64_t cnt = checked_pow(p_, d);
            for (std::int64_t low = 0; low < cnt; ++low) {
                std::vector<int> g = digits(static_cast<int>(low), d);
                g.push_back(1);
                auto r = poly_mod(f, g);
                bool zero = true;
                for (int c : r) zero &= (c == 0);
                if (zero) return false;
            }
        }
        return true;
    }

    std::vector<int> least_irreducible() const {
        for (int low = 0; low < q_; ++low) {
            std::vector<int> f = digits(low, k_);
            f.push_back(1);
            if (irreducible(f)) return f;
        }
        throw InvalidParams("no irreducible polynomial found");
    }

    int slow_mul(int a, int b) const {
        auto da = digits(a, k_), db = digits(b, k_);
        std::vector<int> prod(2 * k_, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        auto r = poly_mod(prod, modulus_);
        int v = 0;
        for (int i = k_ - 1; i >= 0; --i) v = v * p_ + r[i];
        return v;
    }

    void build_tables() {
        std::vector<int> primes;
        int m = q_ - 1;
        for (int d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);
        auto slow_pow = [&](int a, int e) {
            int r = 1;
            for (; e; e >>= 1, a = slow_mul(a, a))
                if (e & 1) r = slow_mul(r, a);
            return r;
        };
        for (int g = 1; g < q_; ++g) {
            bool prim = true;
            for (int r : primes)
                if (slow_pow(g, (q_ - 1) / r) == 1) {
                    prim = false;
                    break;
                }
            if (!prim) continue;
            exp_.assign(2 * (q_ - 1) + 1, 0);
            log_.assign(q_, -1);
            int x = 1;
            for (int j = 0; j < 2 * (q_ - 1) + 1; ++j) {
                exp_[j] = x;
                if (j < q_ - 1) log_[x] = j;
                x = slow_mul(x, g);
            }
            return;
        }
        throw InvalidParams("no primitive element found");
    }
};

} // namespace affinv
