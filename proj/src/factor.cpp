#include "fibtower/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "fibtower/errors.hpp"

namespace fibtower {

namespace {

constexpr unsigned kTrialLimit = 4096;

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned> out;
        for (unsigned i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

Natural random_below(std::mt19937_64& rng, const Natural& n) {
    // n > 3 here; modulo bias is irrelevant for rho starting points.
    Natural r = from_u64(rng());
    r <<= 64;
    r += from_u64(rng());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Pollard rho with Brent's cycle detection. Returns a nontrivial divisor.
Natural brent_rho(const Natural& n, std::mt19937_64& rng, std::uint64_t& budget_left) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    constexpr std::uint64_t kBlock = 128;
    auto step = [&](Natural& v, const Natural& c) {
        v *= v;
        v += c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    auto spend = [&](std::uint64_t amount) {
        if (amount > budget_left) {
            throw FactorBudgetExceeded("rho budget exhausted on a " +
                                       std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) +
                                       "-digit composite");
        }
        budget_left -= amount;
    };

    for (;;) {
        Natural y = random_below(rng, n - 3) + 1;
        const Natural c = random_below(rng, n - 3) + 1;
        Natural x, ys, diff;
        Natural q = 1;
        Natural g = 1;
        std::uint64_t r = 1;
        do {
            x = y;
            spend(r);
            for (std::uint64_t i = 0; i < r; ++i) step(y, c);
            std::uint64_t k = 0;
            do {
                ys = y;
                const std::uint64_t run = std::min(kBlock, r - k);
                spend(run);
                for (std::uint64_t i = 0; i < run; ++i) {
                    step(y, c);
                    diff = x - y;
                    mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                    q *= diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += kBlock;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);

        if (g == n) {
            // Block overshot; retrace one step at a time.
            do {
                spend(1);
                step(ys, c);
                diff = x - ys;
                mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

}  // namespace

FactoredNatural::FactoredNatural(Natural value, std::vector<PrimePower> factors)
    : value_(std::move(value)), factors_(std::move(factors)) {}

FactoredNatural FactoredNatural::prime(const Natural& p, std::uint64_t exponent) {
    if (exponent == 0) return {};
    return FactoredNatural(pow_natural(p, exponent), {{p, exponent}});
}

bool FactoredNatural::verify() const {
    Natural product = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& [p, e] = factors_[i];
        if (e == 0 || !is_probable_prime(p)) return false;
        if (i > 0 && !(factors_[i - 1].prime < p)) return false;
        product *= pow_natural(p, e);
    }
    return product == value_;
}

FactoredNatural FactoredNatural::operator*(const FactoredNatural& other) const {
    std::vector<PrimePower> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
            merged.push_back(*a++);
        } else if (a == factors_.end() || b->prime < a->prime) {
            merged.push_back(*b++);
        } else {
            merged.push_back({a->prime, a->exponent + b->exponent});
            ++a;
            ++b;
        }
    }
    return FactoredNatural(value_ * other.value_, std::move(merged));
}

FactoredNatural FactoredNatural::divided_by_prime(const Natural& q) const {
    auto out = *this;
    auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                           [&](const PrimePower& pp) { return pp.prime == q; });
    if (it == out.factors_.end()) throw std::invalid_argument("divided_by_prime: q not a factor");
    if (--it->exponent == 0) out.factors_.erase(it);
    mpz_divexact(out.value_.get_mpz_t(), out.value_.get_mpz_t(), q.get_mpz_t());
    return out;
}

FactoredNatural lcm(const FactoredNatural& a, const FactoredNatural& b) {
    std::vector<PrimePower> merged;
    Natural value = 1;
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() || y != b.factors_.end()) {
        PrimePower next;
        if (y == b.factors_.end() || (x != a.factors_.end() && x->prime < y->prime)) {
            next = *x++;
        } else if (x == a.factors_.end() || y->prime < x->prime) {
            next = *y++;
        } else {
            next = {x->prime, std::max(x->exponent, y->exponent)};
            ++x;
            ++y;
        }
        value *= pow_natural(next.prime, next.exponent);
        merged.push_back(std::move(next));
    }
    return FactoredNatural(std::move(value), std::move(merged));
}

bool is_probable_prime(const Natural& x) {
    return x >= 2 && mpz_probab_prime_p(x.get_mpz_t(), 30) > 0;
}

FactoredNatural factorize(const Natural& x, const FactorOptions& options) {
    if (x < 1) throw std::invalid_argument("factorize: x must be >= 1");
    std::map<Natural, std::uint64_t> found;
    Natural rest = x;
    for (unsigned p : small_primes()) {
        if (rest == 1) break;
        if (Natural(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++found[Natural(p)];
        }
    }

    std::mt19937_64 rng(options.seed);
    std::uint64_t budget_left = options.budget;
    std::vector<Natural> pending;
    if (rest > 1) pending.push_back(rest);
    while (!pending.empty()) {
        Natural n = std::move(pending.back());
        pending.pop_back();
        if (n == 1) continue;
        if (is_probable_prime(n)) {
            ++found[n];
            continue;
        }
        // Perfect powers make rho slow; peel them first.
        Natural root;
        bool peeled = false;
        for (unsigned long e = 2; e < mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                for (unsigned long i = 0; i < e; ++i) pending.push_back(root);
                peeled = true;
                break;
            }
        }
        if (peeled) continue;
        Natural d = brent_rho(n, rng, budget_left);
        pending.push_back(n / d);
        pending.push_back(std::move(d));
    }

    std::vector<PrimePower> factors;
    factors.reserve(found.size());
    for (auto& [p, e] : found) factors.push_back({p, e});
    return FactoredNatural(x, std::move(factors));
}

}  // namespace fibtower
