#include "crrigid/mpoly.hpp"

#include <stdexcept>

namespace crrigid {

int Monomial::total_degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int Monomial::degree_range(int lo, int hi) const {
    int d = 0;
    for (int i = lo; i < hi; ++i) d += e[i];
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    if (e.size() != m.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
}

Monomial Monomial::quotient_by(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) {
        r.e[i] -= m.e[i];
        if (r.e[i] < 0) throw std::logic_error("Monomial: quotient by non-divisor");
    }
    return r;
}

Monomial Monomial::conj() const {
    Monomial r = *this;
    size_t n = e.size() / 2;
    for (size_t i = 0; i < n; ++i) std::swap(r.e[i], r.e[i + n]);
    return r;
}

bool monomial_precedes(const Monomial& x, const Monomial& y) {
    int dx = x.total_degree(), dy = y.total_degree();
    if (dx != dy) return dx > dy;
    return x.e > y.e;  // lexicographic, earlier slot dominant
}

MPoly MPoly::constant(int nvars, const CScalar& c) {
    MPoly p(nvars);
    p.add_term(Monomial(2 * nvars), c);
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    MPoly p(nvars);
    Monomial m(2 * nvars);
    m.e[i] = 1;
    p.add_term(m, CScalar(1L));
    return p;
}

MPoly MPoly::conj_variable(int nvars, int i) {
    MPoly p(nvars);
    Monomial m(2 * nvars);
    m.e[nvars + i] = 1;
    p.add_term(m, CScalar(1L));
    return p;
}

const Monomial& MPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("MPoly: leading monomial of zero");
    return terms_.begin()->first;
}

const CScalar& MPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("MPoly: leading coefficient of zero");
    return terms_.begin()->second;
}

CScalar MPoly::constant_term() const {
    auto it = terms_.find(Monomial(slots()));
    return it == terms_.end() ? CScalar() : it->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();  // graded order: leading term has max degree
}

int MPoly::holo_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_range(0, n_));
    return d;
}

int MPoly::anti_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_range(n_, 2 * n_));
    return d;
}

bool MPoly::is_holomorphic() const {
    for (const auto& [m, c] : terms_)
        if (m.degree_range(n_, 2 * n_) != 0) return false;
    return true;
}

void MPoly::add_term(const Monomial& m, const CScalar& c) {
    if (c.is_zero()) return;
    if (m.slots() != slots()) throw std::invalid_argument("MPoly: monomial arity mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::conj() const {
    MPoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.conj(), c.conj());
    return r;
}

MPoly MPoly::derivative(int slot) const {
    MPoly r(n_);
    for (const auto& [m, c] : terms_) {
        if (m.e[slot] == 0) continue;
        Monomial q = m;
        q.e[slot] -= 1;
        r.add_term(q, CScalar(Rational(m.e[slot])) * c);
    }
    return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
    if (static_cast<int>(images.size()) != slots())
        throw std::invalid_argument("MPoly: compose needs one image per slot");
    int arity = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != arity) throw std::invalid_argument("MPoly: compose image arity mismatch");

    // power cache: pw[s][k] = images[s]^k
    std::vector<std::vector<MPoly>> pw(images.size());
    for (size_t s = 0; s < images.size(); ++s) pw[s].push_back(MPoly::constant(arity, CScalar(1L)));

    MPoly result(arity);
    for (const auto& [m, c] : terms_) {
        MPoly term = MPoly::constant(arity, c);
        for (int s = 0; s < m.slots(); ++s) {
            int k = m.e[s];
            if (k == 0) continue;
            while (static_cast<int>(pw[s].size()) <= k) pw[s].push_back(pw[s].back() * images[s]);
            term = term * pw[s][k];
        }
        result += term;
    }
    return result;
}

CScalar MPoly::eval(const std::vector<CScalar>& p) const {
    std::vector<CScalar> zeta(p.size());
    for (size_t i = 0; i < p.size(); ++i) zeta[i] = p[i].conj();
    return eval2(p, zeta);
}

CScalar MPoly::eval2(const std::vector<CScalar>& z, const std::vector<CScalar>& zeta) const {
    if (static_cast<int>(z.size()) != n_ || static_cast<int>(zeta.size()) != n_)
        throw std::invalid_argument("MPoly: evaluation point arity mismatch");
    CScalar acc;
    for (const auto& [m, c] : terms_) {
        CScalar t = c;
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < m.e[i]; ++k) t = t * z[i];
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < m.e[n_ + i]; ++k) t = t * zeta[i];
        acc = acc + t;
    }
    return acc;
}

void MPoly::check_arity(const MPoly& q) const {
    if (n_ != q.n_) throw std::invalid_argument("MPoly: variable-arity mismatch");
}

MPoly& MPoly::operator+=(const MPoly& q) {
    check_arity(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& q) {
    check_arity(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

MPoly operator-(const MPoly& p) {
    MPoly r(p.n_);
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly operator*(const MPoly& p, const MPoly& q) {
    p.check_arity(q);
    MPoly r(p.n_);
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp.times(mq), cp * cq);
    return r;
}

MPoly operator*(const CScalar& c, const MPoly& p) {
    MPoly r(p.n_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

MPoly poly_reduce(const MPoly& p, const MPoly& rho) {
    if (rho.is_zero()) throw std::invalid_argument("poly_reduce: zero divisor");
    if (p.nvars() != rho.nvars()) throw std::invalid_argument("poly_reduce: variable-arity mismatch");
    const Monomial& lm = rho.leading_monomial();
    const CScalar& lc = rho.leading_coefficient();

    MPoly work = p;
    MPoly remainder(p.nvars());
    while (!work.is_zero()) {
        const auto& [m, c] = *work.terms().begin();
        if (lm.divides(m)) {
            Monomial q = m.quotient_by(lm);
            CScalar factor = c / lc;
            MPoly sub(p.nvars());
            sub.add_term(q, factor);
            work -= sub * rho;
        } else {
            remainder.add_term(m, c);
            MPoly head(p.nvars());
            head.add_term(m, c);
            work -= head;
        }
    }
    return remainder;
}

std::map<int, MPoly> homogeneous_parts(const MPoly& p) {
    std::map<int, MPoly> parts;
    for (const auto& [m, c] : p.terms()) {
        int d = m.total_degree();
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, MPoly(p.nvars())).first;
        it->second.add_term(m, c);
    }
    return parts;
}

std::map<int, MPoly> circle_grading(const MPoly& p) {
    std::map<int, MPoly> parts;
    int n = p.nvars();
    for (const auto& [m, c] : p.terms()) {
        int w = m.degree_range(0, n) - m.degree_range(n, 2 * n);
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(w, MPoly(p.nvars())).first;
        it->second.add_term(m, c);
    }
    return parts;
}

MPoly real_part(const MPoly& p) {
    MPoly s = p + p.conj();
    CScalar half(Rational(1, 2));
    return half * s;
}

}  // namespace crrigid
