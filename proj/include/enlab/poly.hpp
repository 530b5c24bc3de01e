#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enlab/ints.hpp"

namespace enlab {

// Exponent vector of a monomial; length equals the owning polynomial's
// variable count.
using ExpVec = std::vector<std::uint32_t>;

inline i64 exp_degree(const ExpVec& e) {
    i64 d = 0;
    for (auto v : e) d += v;
    return d;
}

// Graded-lexicographic order: by total degree, then lexicographically.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        i64 da = exp_degree(a), db = exp_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial with integer coefficients in canonical form:
// no zero coefficients, every exponent vector of length num_vars, terms kept
// in graded-lex order. Immutable in spirit; all operations return new values.
class Polynomial {
public:
    using TermMap = std::map<ExpVec, i64, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

    static Polynomial zero(int num_vars = 0) { return Polynomial(num_vars); }
    static Polynomial constant(i64 c, int num_vars = 0);
    static Polynomial variable(int index, int num_vars); // index is 1-based

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    i64 total_degree() const; // 0 for the zero polynomial

    // Coefficient arithmetic is checked; overflow raises a Domain error.
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial negated() const;
    Polynomial pow(std::uint32_t e) const;

    // Returns a copy viewing the same terms over k >= num_vars variables.
    Polynomial widened(int k) const;
    // Variable permutation (perm[i] = new 1-based index of old variable i+1).
    Polynomial permuted(std::span<const int> perm) const;

    // Exact evaluation; promotes to arbitrary precision internally.
    BigInt evaluate(std::span<const i64> point) const;
    // Checked 64-bit evaluation; nullopt if any intermediate leaves i64.
    std::optional<i64> evaluate_i64(std::span<const i64> point) const;

    // max of variable count, total degree and coefficient magnitudes.
    i64 norm() const;

    // Canonical text form, graded-lex descending, e.g. "x1^2 - x2".
    std::string format() const;

    bool operator==(const Polynomial& rhs) const {
        return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
    }
    // Any fixed total order; used for hash-consing maps.
    bool operator<(const Polynomial& rhs) const;

    // Adds c * x^e to the term map (checked); drops the term if it cancels.
    void add_term(const ExpVec& e, i64 c);

private:
    int num_vars_ = 0;
    TermMap terms_;
};

struct ParseLimits {
    i64 max_degree = 16; // per-term total degree after expansion
    int max_vars = 16;
    int min_vars = 0; // override: raise num_vars above the highest mentioned
};

// Grammar: expr := ('+'|'-')? term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := integer | var | '(' expr ')' | factor '^' posint; var := 'x' posint.
// An optional trailing "= 0" is accepted and ignored. Syntax errors report the
// byte offset.
Polynomial parse_polynomial(std::string_view text, const ParseLimits& limits = {});

// ---- Eq. (1) machinery: a x^2 + b xy + c y^2 + d x + e y + f = 0 ----

struct QuadraticCoeffs {
    i64 a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
    bool all_zero() const { return !a && !b && !c && !d && !e && !f; }
};

// 20 * max(|a|,...,|f|)^4, exact. Domain error on the all-zero equation.
BigInt quadratic_height_bound(const QuadraticCoeffs& q);

struct QuadEnumOptions {
    // Hard cap on the total number of x-values any scan may visit.
    i64 max_scan = 600'000'000;
    // Cap on materialized solutions (vertical-line families can be huge).
    std::size_t max_solutions = 10'000'000;
};

struct QuadraticSolutions {
    std::vector<std::array<i64, 2>> solutions; // lex sorted, height <= bound
    bool finite = true;      // no solution with height in (bound, 2*bound]
    BigInt bound;            // 20 * M^4
    std::optional<std::array<i64, 2>> beyond_witness; // lex-min annulus solution
};

// Enumerates every integer (x, y) with max(|x|,|y|) <= bound satisfying the
// equation, and scans the annulus (bound, 2*bound] for a finiteness
// counterwitness. Exact arithmetic throughout.
QuadraticSolutions enumerate_quadratic_solutions(const QuadraticCoeffs& q,
                                                 const QuadEnumOptions& opts = {});

} // namespace enlab
