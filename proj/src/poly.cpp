#include "enlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace enlab {

Polynomial Polynomial::constant(i64 c, int num_vars) {
    Polynomial p(num_vars);
    if (c != 0) p.terms_.emplace(ExpVec(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int index, int num_vars) {
    if (index < 1 || index > num_vars) throw_domain("variable index out of range");
    Polynomial p(num_vars);
    ExpVec e(num_vars, 0);
    e[index - 1] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

i64 Polynomial::total_degree() const {
    // grlex order: the last term has maximal degree
    if (terms_.empty()) return 0;
    return exp_degree(terms_.rbegin()->first);
}

void Polynomial::add_term(const ExpVec& e, i64 c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    i64 sum;
    if (add_overflows(it->second, c, sum))
        throw_domain("coefficient overflow beyond 64-bit signed range");
    if (sum == 0)
        terms_.erase(it);
    else
        it->second = sum;
}

namespace {

int joint_vars(const Polynomial& a, const Polynomial& b) {
    return std::max(a.num_vars(), b.num_vars());
}

} // namespace

Polynomial Polynomial::widened(int k) const {
    if (k < num_vars_) throw_domain("cannot shrink a polynomial's variable count");
    if (k == num_vars_) return *this;
    Polynomial p(k);
    for (const auto& [e, c] : terms_) {
        ExpVec w(e);
        w.resize(k, 0);
        p.terms_.emplace(std::move(w), c);
    }
    return p;
}

Polynomial Polynomial::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != num_vars_) throw_domain("permutation arity mismatch");
    Polynomial p(num_vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec w(num_vars_, 0);
        for (int i = 0; i < num_vars_; ++i) w[perm[i] - 1] = e[i];
        p.terms_.emplace(std::move(w), c);
    }
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    int k = joint_vars(*this, rhs);
    Polynomial r = widened(k);
    for (const auto& [e, c] : rhs.widened(k).terms()) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::negated() const {
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (c == I64_MIN) throw_domain("coefficient overflow beyond 64-bit signed range");
        r.terms_.emplace(e, -c);
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + rhs.negated(); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    int k = joint_vars(*this, rhs);
    Polynomial a = widened(k), b = rhs.widened(k);
    Polynomial r(k);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            ExpVec e(k);
            for (int i = 0; i < k; ++i) {
                std::uint64_t s = std::uint64_t(ea[i]) + eb[i];
                if (s > 0xffffffffu) throw_domain("exponent overflow in multiplication");
                e[i] = static_cast<std::uint32_t>(s);
            }
            i64 c;
            if (mul_overflows(ca, cb, c))
                throw_domain("coefficient overflow beyond 64-bit signed range");
            r.add_term(e, c);
        }
    }
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = Polynomial::constant(1, num_vars_);
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

BigInt Polynomial::evaluate(std::span<const i64> point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw_domain("evaluation point arity mismatch");
    // power tables per variable, filled lazily up to the max exponent used
    std::vector<std::vector<BigInt>> powers(num_vars_);
    for (int i = 0; i < num_vars_; ++i) powers[i].push_back(1);
    auto power = [&](int var, std::uint32_t e) -> const BigInt& {
        auto& tab = powers[var];
        while (tab.size() <= e) tab.push_back(tab.back() * point[var]);
        return tab[e];
    };
    BigInt acc = 0;
    for (const auto& [e, c] : terms_) {
        BigInt t = c;
        for (int i = 0; i < num_vars_; ++i)
            if (e[i]) t *= power(i, e[i]);
        acc += t;
    }
    return acc;
}

std::optional<i64> Polynomial::evaluate_i64(std::span<const i64> point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw_domain("evaluation point arity mismatch");
    i64 acc = 0;
    for (const auto& [e, c] : terms_) {
        i64 t = c;
        for (int i = 0; i < num_vars_; ++i) {
            for (std::uint32_t r = 0; r < e[i]; ++r) {
                if (mul_overflows(t, point[i], t)) return std::nullopt;
            }
        }
        if (add_overflows(acc, t, acc)) return std::nullopt;
    }
    return acc;
}

i64 Polynomial::norm() const {
    i64 m = std::max<i64>(num_vars_, total_degree());
    for (const auto& [e, c] : terms_) m = std::max(m, abs64(c, "coefficient"));
    return m;
}

std::string Polynomial::format() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // graded-lex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        // |c| without overflow on INT64_MIN (parse forbids it, be safe anyway)
        u64 mag = neg ? (~static_cast<u64>(c) + 1) : static_cast<u64>(c);
        bool any_var = std::any_of(e.begin(), e.end(), [](auto v) { return v != 0; });
        bool coef_shown = !any_var || mag != 1;
        if (coef_shown) out << mag;
        bool need_star = coef_shown;
        for (int i = 0; i < num_vars_; ++i) {
            if (!e[i]) continue;
            if (need_star) out << "*";
            out << "x" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

bool Polynomial::operator<(const Polynomial& rhs) const {
    if (num_vars_ != rhs.num_vars_) return num_vars_ < rhs.num_vars_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
        [](const auto& a, const auto& b) {
            GrlexLess less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return a.second < b.second;
        });
}

} // namespace enlab
