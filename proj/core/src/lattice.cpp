#include "jrel/lattice.hpp"

#include <algorithm>

namespace jrel {

RelationMatrix build_matrix(const std::vector<Relation>& rels, Exp window) {
    if (window < 1) throw Error("build_matrix: window must be positive");
    RelationMatrix M;
    M.window = window;
    for (const auto& r : rels) {
        if (r.terms.empty()) throw Error("build_matrix: relation '" + r.provenance + "' is empty");
        bool fits = true;
        for (const auto& [e, c] : r.terms)
            if (e < -window || e > window) fits = false;
        if (!fits) {
            M.dropped.push_back(r.provenance);
            continue;
        }
        M.relations.push_back(r);
        if (r.modulus > 0) ++M.slack_count;
    }
    M.rows.reserve(M.relations.size());
    std::size_t next_slack = 0;
    for (const auto& r : M.relations) {
        std::vector<Int> row(M.ncols(), Int(0));
        for (const auto& [e, c] : r.terms) row[M.t_col(e)] = c;
        if (r.modulus > 0) row[M.t_cols() + next_slack++] = Int(-r.modulus);
        M.rows.push_back(std::move(row));
    }
    return M;
}

namespace {

void row_axpy(std::vector<Int>& dst, const Int& q, const std::vector<Int>& src) {
    for (std::size_t j = 0; j < dst.size(); ++j)
        if (src[j] != 0) dst[j] -= q * src[j];
}

// One echelon sweep over the given column order using smallest-pivot
// reduction with floor division. Rows may be wider than the columns swept
// (trailing passive columns ride along through swaps, negations and axpys).
// normalize_sign flips finished pivot rows positive in the pivot column.
// Returns the number of pivot rows (echelon prefix).
std::size_t sweep(std::vector<std::vector<Int>>& A, const std::vector<std::size_t>& cols,
                  bool normalize_sign) {
    std::size_t r0 = 0;
    for (std::size_t c : cols) {
        if (r0 >= A.size()) break;
        while (true) {
            std::size_t piv = A.size();
            for (std::size_t i = r0; i < A.size(); ++i) {
                if (A[i][c] == 0) continue;
                if (piv == A.size() || iabs(A[i][c]) < iabs(A[piv][c])) piv = i;
            }
            if (piv == A.size()) break;
            bool reduced_any = false;
            for (std::size_t i = r0; i < A.size(); ++i) {
                if (i == piv || A[i][c] == 0) continue;
                Int q = fdiv(A[i][c], A[piv][c]);
                if (q != 0) row_axpy(A[i], q, A[piv]);
                reduced_any = true;
            }
            if (!reduced_any) {
                std::swap(A[r0], A[piv]);
                if (normalize_sign && A[r0][c] < 0)
                    for (auto& x : A[r0]) x = -x;
                ++r0;
                break;
            }
        }
    }
    return r0;
}

std::vector<std::size_t> natural_cols(std::size_t n) {
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return cols;
}

// Column order for minimal-multiple elimination: slack generators first,
// then every t-column except the target, target last. What survives in the
// target column after the sweep is exactly the span's trace on it.
std::vector<std::size_t> target_last_cols(const RelationMatrix& M, std::size_t tcol) {
    std::vector<std::size_t> cols;
    for (std::size_t c = M.t_cols(); c < M.ncols(); ++c) cols.push_back(c);
    for (std::size_t c = 0; c < M.t_cols(); ++c)
        if (c != tcol) cols.push_back(c);
    cols.push_back(tcol);
    return cols;
}

}  // namespace

std::vector<std::vector<Int>> hermite_form(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw Error("hermite_form: ragged rows");

    std::size_t r0 = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (r0 >= rows.size()) break;
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t i = r0; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (piv == rows.size() || iabs(rows[i][c]) < iabs(rows[piv][c])) piv = i;
            }
            if (piv == rows.size()) break;
            bool reduced_any = false;
            for (std::size_t i = r0; i < rows.size(); ++i) {
                if (i == piv || rows[i][c] == 0) continue;
                Int q = fdiv(rows[i][c], rows[piv][c]);
                if (q != 0) row_axpy(rows[i], q, rows[piv]);
                reduced_any = true;
            }
            if (!reduced_any) {
                std::swap(rows[r0], rows[piv]);
                if (rows[r0][c] < 0)
                    for (auto& x : rows[r0]) x = -x;
                // Reduce the entries above the new pivot into [0, pivot).
                for (std::size_t i = 0; i < r0; ++i) {
                    Int q = fdiv(rows[i][c], rows[r0][c]);
                    if (q != 0) row_axpy(rows[i], q, rows[r0]);
                }
                ++r0;
                break;
            }
        }
    }
    rows.resize(r0);
    return rows;
}

MultipleResult minimal_multiple(const RelationMatrix& M, Exp target, bool want_certificate) {
    if (target < -M.window || target > M.window)
        throw Error("minimal_multiple: target exponent t^" + std::to_string(target) +
                    " outside window " + std::to_string(M.window));
    const std::size_t W = M.ncols();
    const std::size_t n = M.rows.size();
    const std::size_t tcol = M.t_col(target);

    // Passive identity block on the right tracks the row combination.
    std::vector<std::vector<Int>> A;
    A.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> row = M.rows[i];
        if (want_certificate) {
            row.resize(W + n, Int(0));
            row[W + i] = 1;
        }
        A.push_back(std::move(row));
    }
    sweep(A, target_last_cols(M, tcol), /*normalize_sign=*/true);

    MultipleResult res;
    std::size_t best = A.size();
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i][tcol] == 0) continue;
        bool clean = true;
        for (std::size_t j = 0; j < W && clean; ++j)
            if (j != tcol && A[i][j] != 0) clean = false;
        if (!clean) continue;
        if (best == A.size() || iabs(A[i][tcol]) < iabs(A[best][tcol])) best = i;
    }
    if (best == A.size()) return res;  // infinite: no multiple in the span

    res.finite = true;
    std::vector<Int>& row = A[best];
    if (row[tcol] < 0)
        for (auto& x : row) x = -x;
    res.m = row[tcol];
    if (want_certificate) {
        for (std::size_t i = 0; i < n; ++i)
            if (row[W + i] != 0) res.combination[i] = row[W + i];
        // Reconstruct before promising anything.
        std::vector<Int> acc(W, Int(0));
        for (const auto& [i, coeff] : res.combination)
            for (std::size_t j = 0; j < W; ++j) acc[j] += coeff * M.rows[i][j];
        for (std::size_t j = 0; j < W; ++j)
            if (acc[j] != (j == tcol ? res.m : Int(0)))
                throw Error("minimal_multiple: internal certificate reconstruction failed");
    }
    return res;
}

MultipleResult identity_multiple(const RelationMatrix& M, const std::map<Exp, Int>& lhs) {
    for (const auto& [e, c] : lhs)
        if (c != 0 && (e < -M.window || e > M.window))
            throw Error("identity exponent t^" + std::to_string(e) + " outside window " +
                        std::to_string(M.window));
    const std::size_t W = M.ncols();
    const std::size_t n = M.rows.size();
    const std::size_t augcol = W;
    const std::size_t ident = W + 1;  // identity block offset: n rows + the lhs row

    std::vector<std::vector<Int>> A;
    A.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> row = M.rows[i];
        row.resize(ident + n + 1, Int(0));
        row[ident + i] = 1;
        A.push_back(std::move(row));
    }
    std::vector<Int> lrow(ident + n + 1, Int(0));
    for (const auto& [e, c] : lhs)
        if (c != 0) lrow[M.t_col(e)] = c;
    lrow[augcol] = 1;
    lrow[ident + n] = 1;
    A.push_back(std::move(lrow));

    // Slack columns, then every t-column, then the augmented marker column.
    std::vector<std::size_t> cols;
    for (std::size_t c = M.t_cols(); c < W; ++c) cols.push_back(c);
    for (std::size_t c = 0; c < M.t_cols(); ++c) cols.push_back(c);
    cols.push_back(augcol);
    sweep(A, cols, /*normalize_sign=*/false);

    MultipleResult res;
    std::size_t best = A.size();
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i][augcol] == 0) continue;
        bool clean = true;
        for (std::size_t j = 0; j < W && clean; ++j)
            if (A[i][j] != 0) clean = false;
        if (!clean) continue;
        if (best == A.size() || iabs(A[i][augcol]) < iabs(A[best][augcol])) best = i;
    }
    if (best == A.size()) return res;

    // The found row reads g_0*row_0 + … + g_{n-1}*row_{n-1} + g_n*lhs = 0 on
    // the real columns with g_n in the marker column, i.e. g_n*lhs =
    // Σ (−g_i)*row_i.
    res.finite = true;
    std::vector<Int>& row = A[best];
    if (row[augcol] < 0)
        for (auto& x : row) x = -x;
    if (row[ident + n] != row[augcol])
        throw Error("identity_multiple: internal marker bookkeeping failed");
    res.m = row[augcol];
    for (std::size_t i = 0; i < n; ++i)
        if (row[ident + i] != 0) res.combination[i] = -row[ident + i];

    std::vector<Int> acc(W, Int(0));
    for (const auto& [i, coeff] : res.combination)
        for (std::size_t j = 0; j < W; ++j) acc[j] += coeff * M.rows[i][j];
    std::vector<Int> want(W, Int(0));
    for (const auto& [e, c] : lhs)
        if (c != 0) want[M.t_col(e)] = res.m * c;
    if (acc != want) throw Error("identity_multiple: internal certificate reconstruction failed");
    return res;
}

bool check_identity(const RelationMatrix& M, const std::map<Exp, Int>& lhs, int p) {
    auto res = identity_multiple(M, lhs);
    return res.finite && res.m % p != 0;
}

Certificate extract_certificate(const RelationMatrix& M, Exp target, const Int& m) {
    if (m < 1) throw Error("extract_certificate: m must be positive");
    auto res = minimal_multiple(M, target, /*want_certificate=*/true);
    if (!res.finite || !divides(res.m, m))
        throw Error("extract_certificate: " + dec(m) + "*t^" + std::to_string(target) +
                    " is not in the row span");
    Certificate cert;
    cert.m = m;
    cert.target = target;
    const Int scale = m / res.m;
    for (const auto& [i, coeff] : res.combination) cert.combination[i] = coeff * scale;
    return cert;
}

bool verify_certificate(const Certificate& cert, const RelationMatrix& M,
                        std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    if (cert.m < 1) return fail("certificate multiple m = " + dec(cert.m) + " is not positive");
    const std::size_t W = M.ncols();
    std::vector<Int> acc(W, Int(0));
    for (const auto& [idx, coeff] : cert.combination) {
        if (idx >= M.rows.size())
            return fail("certificate references missing row index " + std::to_string(idx) +
                        " (matrix has " + std::to_string(M.rows.size()) + " rows)");
        for (std::size_t j = 0; j < W; ++j) acc[j] += coeff * M.rows[idx][j];
    }
    std::vector<Int> want(W, Int(0));
    if (cert.lhs.empty()) {
        if (cert.target < -M.window || cert.target > M.window)
            return fail("certificate target t^" + std::to_string(cert.target) +
                        " outside window");
        want[M.t_col(cert.target)] = cert.m;
    } else {
        for (const auto& [e, c] : cert.lhs) {
            if (c == 0) continue;
            if (e < -M.window || e > M.window)
                return fail("certificate left side exponent t^" + std::to_string(e) +
                            " outside window");
            want[M.t_col(e)] = cert.m * c;
        }
    }
    for (std::size_t j = 0; j < W; ++j)
        if (acc[j] != want[j]) {
            Exp shown = static_cast<Exp>(j) - M.window;
            std::string where = j < M.t_cols() ? "t^" + std::to_string(shown)
                                               : "slack " + std::to_string(j - M.t_cols());
            return fail("combination mismatch at " + where + ": got " + dec(acc[j]) +
                        ", expected " + dec(want[j]));
        }
    if (diagnostic) diagnostic->clear();
    return true;
}

Verdict is_zero_p_local(const RelationMatrix& M, int p, Exp target) {
    if (p < 2) throw Error("is_zero_p_local: p must be a prime >= 2");
    Verdict v;
    v.target = target;
    v.prime = p;
    auto res = minimal_multiple(M, target, /*want_certificate=*/true);
    v.finite = res.finite;
    if (res.finite) {
        v.m = res.m;
        v.zero_at_p = (res.m % p != 0);
        if (v.zero_at_p) {
            Certificate cert;
            cert.m = res.m;
            cert.target = target;
            cert.prime = p;
            cert.combination = res.combination;
            v.certificate = std::move(cert);
        }
    }
    if (p != 2 && p != 3)
        v.scope_note =
            "primes >= 5 are outside the calibrated scope of this engine; the vanishing "
            "there is already known on general grounds";
    return v;
}

}  // namespace jrel
