#include "rpe/lattice.hpp"

#include <algorithm>

namespace rpe {

namespace {

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Integer-only LLL state: d[j] are the Gram determinants of the leading
// j x j blocks (d[0] = 1), lambda[i][j] = d[j+1-th scale] * mu_{ij}. All
// updates stay exact; divisions below are exact by construction.
struct LLLState {
    IntMat b;
    std::vector<Int> d;        // size n+1, d[0] = 1
    std::vector<IntVec> lam;   // lam[i][j], j < i

    explicit LLLState(IntMat basis) : b(std::move(basis)) {
        size_t n = b.size();
        d.assign(n + 1, Int(1));
        lam.assign(n, IntVec(n, Int(0)));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j <= i; ++j) {
                Int u = dot(b[i], b[j]);
                for (size_t r = 0; r < j; ++r) u = (d[r + 1] * u - lam[i][r] * lam[j][r]) / d[r];
                if (j < i)
                    lam[i][j] = u;
                else
                    d[i + 1] = u;
            }
            if (d[i + 1] == 0) throw domain_error("lll_reduce: rows are linearly dependent");
        }
    }

    // |2 lambda| > d  =>  subtract q * b[l] from b[k].
    void red(size_t k, size_t l) {
        Int two_lam = 2 * lam[k][l];
        if (abs(two_lam) <= d[l + 1]) return;
        Int q = round_rat(Rat(lam[k][l], d[l + 1]));
        for (size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
        lam[k][l] -= q * d[l + 1];
        for (size_t j = 0; j < l; ++j) lam[k][j] -= q * lam[l][j];
    }

    void swap_rows(size_t k) {  // swaps rows k and k-1, k >= 1
        std::swap(b[k], b[k - 1]);
        for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lam_kk = lam[k][k - 1];
        Int bnew = (d[k - 1] * d[k + 1] + lam_kk * lam_kk) / d[k];
        for (size_t i = k + 1; i < b.size(); ++i) {
            Int t = lam[i][k];
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lam_kk * t) / d[k];
            lam[i][k - 1] = (bnew * t + lam_kk * lam[i][k]) / d[k + 1];
        }
        d[k] = bnew;
    }

    bool lovasz_ok(size_t k) const {
        // B*_k >= (99/100 - mu^2) B*_{k-1}, in d/lambda form:
        // 100 d[k+1] d[k-1] >= 99 d[k]^2 - 100 lambda^2
        Int lhs = 100 * d[k + 1] * d[k - 1];
        Int rhs = 99 * d[k] * d[k] - 100 * lam[k][k - 1] * lam[k][k - 1];
        return lhs >= rhs;
    }
};

}  // namespace

IntMat lll_reduce(IntMat basis) {
    size_t n = basis.size();
    if (n == 0) return basis;
    for (const IntVec& row : basis)
        if (row.size() != basis[0].size()) throw domain_error("lll_reduce: ragged matrix");
    if (basis[0].size() < n) throw domain_error("lll_reduce: more rows than columns");

    LLLState st(std::move(basis));
    size_t k = 1;
    while (k < n) {
        st.red(k, k - 1);
        if (!st.lovasz_ok(k)) {
            st.swap_rows(k);
            k = (k > 1) ? k - 1 : 1;
        } else {
            for (size_t l = k - 1; l-- > 0;) st.red(k, l);
            ++k;
        }
    }
    return st.b;
}

namespace {

// (actual degree, max |coeff|, coeff tuple) for deterministic tie-breaks.
struct CandidateRank {
    long degree;
    Int norm;
    std::vector<Int> coeffs;

    bool operator<(const CandidateRank& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (norm != o.norm) return norm < o.norm;
        return coeffs < o.coeffs;
    }
};

Int linf_norm(const std::vector<Int>& v) {
    Int m = 0;
    for (const Int& x : v) {
        Int ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

}  // namespace

std::optional<IntPoly> recognize_min_poly(const Real& v, int max_degree, const Ctx& c) {
    if (max_degree < 1) throw domain_error("recognize_min_poly needs max_degree >= 1");
    long P = std::min(v.digits(), c.digits);
    if (P < 30) throw domain_error("recognize_min_poly needs at least 30 digits");
    long m = P - 10;

    Ctx w(P + 10);
    Real scale = pow10(m, w);
    Real vw = round_to(v, w);
    Real v_eval = round_to(v, Ctx(P));

    // round(10^m v^i), i = 0..max_degree
    std::vector<Int> scaled_powers;
    Real pw(1, w);
    for (int i = 0; i <= max_degree; ++i) {
        scaled_powers.push_back((scale * pw).to_int_nearest());
        pw = pw * vw;
    }

    Real accept_tol = pow10(-(P / 2), Ctx(30));
    Real floor_scale = pow10(-m - 5, Ctx(30));

    for (int d = 1; d <= max_degree; ++d) {
        IntMat rows;
        for (int i = 0; i <= d; ++i) {
            IntVec row(static_cast<size_t>(d) + 2, Int(0));
            row[0] = scaled_powers[static_cast<size_t>(i)];
            row[static_cast<size_t>(i) + 1] = 1;
            rows.push_back(std::move(row));
        }
        IntMat reduced = lll_reduce(std::move(rows));

        std::optional<CandidateRank> best;
        for (const IntVec& row : reduced) {
            std::vector<Int> coeffs(row.begin() + 1, row.end());
            IntPoly q{std::vector<Int>(coeffs)};
            if (q.is_zero()) continue;
            Real qv = abs(q.eval(v_eval));
            if (!(qv < accept_tol)) continue;
            Real sig = Real(linf_norm(coeffs), Ctx(30)) * floor_scale;
            if (!(qv < sig)) continue;
            CandidateRank cand{q.degree(), linf_norm(q.coeffs()), q.coeffs()};
            if (!best || cand < *best) best = std::move(cand);
        }
        if (best) return IntPoly{std::move(best->coeffs)}.canonical();
    }
    return std::nullopt;
}

}  // namespace rpe
