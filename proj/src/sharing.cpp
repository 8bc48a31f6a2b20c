#include "itfl/sharing.hpp"

#include <algorithm>
#include <set>

namespace itfl {

void SharingParams::validate() const {
    if (m < 1 || t < 0 || n < m + t) throw ConfigError("sharing params require m>=1, t>=0, n>=m+t");
}

EvaluationDomain EvaluationDomain::standard(const PrimeField& f, int n, int m, int t) {
    EvaluationDomain d;
    if (static_cast<u128>(n + m + t) >= f.modulus())
        throw ConfigError("field too small for evaluation domain");
    for (int i = 1; i <= n; i++) d.alphas.emplace_back(static_cast<u128>(i), f);
    for (int i = n + 1; i <= n + m + t; i++) d.betas.emplace_back(static_cast<u128>(i), f);
    return d;
}

void EvaluationDomain::validate(const SharingParams& params) const {
    if (static_cast<int>(alphas.size()) != params.n ||
        static_cast<int>(betas.size()) != params.m + params.t)
        throw ConfigError("domain size mismatch");
    std::set<u128> seen;
    for (const auto& a : alphas) {
        if (a.is_zero() || !seen.insert(a.value()).second)
            throw ConfigError("domain points must be distinct and nonzero");
    }
    for (const auto& b : betas) {
        if (b.is_zero() || !seen.insert(b.value()).second)
            throw ConfigError("domain points must be distinct and nonzero");
    }
}

Fp poly_eval(const std::vector<Fp>& coeffs, const Fp& x) {
    if (coeffs.empty()) return Fp(0, x.field());
    Fp acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Fp> lagrange_interpolate(const FieldVector& xs, const FieldVector& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw FieldError("interpolation size mismatch");
    const PrimeField& f = xs[0].field();
    std::size_t n = xs.size();
    Fp zero(0, f), one(1, f);
    std::vector<Fp> result(n, zero);
    std::vector<Fp> basis;  // product of (x - xs[j]) built incrementally per i
    for (std::size_t i = 0; i < n; i++) {
        // numerator polynomial prod_{j != i} (x - xs[j])
        basis.assign(1, one);
        Fp denom = one;
        for (std::size_t j = 0; j < n; j++) {
            if (j == i) continue;
            basis.push_back(zero);
            for (std::size_t k = basis.size() - 1; k > 0; k--)
                basis[k] = basis[k - 1] - xs[j] * basis[k];
            basis[0] = -xs[j] * basis[0];
            denom *= xs[i] - xs[j];
        }
        Fp w = ys[i] / denom;
        for (std::size_t k = 0; k < basis.size(); k++) result[k] += w * basis[k];
    }
    return result;
}

FieldVector lagrange_weights(const FieldVector& xs, const Fp& target) {
    if (xs.empty()) throw FieldError("no interpolation points");
    std::size_t n = xs.size();
    FieldVector w(n);
    for (std::size_t i = 0; i < n; i++) {
        Fp num(1, target.field()), den(1, target.field());
        for (std::size_t j = 0; j < n; j++) {
            if (j == i) continue;
            num *= target - xs[j];
            den *= xs[i] - xs[j];
        }
        w[i] = num / den;
    }
    return w;
}

Fp lagrange_eval(const FieldVector& xs, const FieldVector& ys, const Fp& target) {
    FieldVector w = lagrange_weights(xs, target);
    Fp acc(0, target.field());
    for (std::size_t i = 0; i < xs.size(); i++) acc += w[i] * ys[i];
    return acc;
}

FieldVector pad_to_multiple(FieldVector v, int m, const PrimeField& f) {
    while (v.size() % static_cast<std::size_t>(m) != 0) v.emplace_back(0, f);
    return v;
}

std::vector<Fp> share_scalar_at_degree(const Fp& secret, int deg, const EvaluationDomain& domain,
                                       Rng& rng) {
    const PrimeField& f = secret.field();
    // random coefficients, then shift so g(betas[0]) = secret
    std::vector<Fp> coeffs(static_cast<std::size_t>(deg) + 1);
    coeffs[0] = Fp(0, f);
    for (int k = 1; k <= deg; k++) coeffs[static_cast<std::size_t>(k)] = rng.field_element(f);
    Fp at_anchor = poly_eval(coeffs, domain.betas[0]);
    coeffs[0] = secret - at_anchor;
    std::vector<Fp> out;
    out.reserve(domain.alphas.size());
    for (const auto& a : domain.alphas) out.push_back(poly_eval(coeffs, a));
    return out;
}

std::vector<Share> lcc_share(const FieldVector& secret, const SharingParams& params,
                             const EvaluationDomain& domain, Rng& rng) {
    params.validate();
    domain.validate(params);
    if (secret.empty()) throw ConfigError("empty secret");
    if (secret.size() % static_cast<std::size_t>(params.m) != 0)
        throw ConfigError("secret length not divisible by m (zero-pad first)");
    const PrimeField& f = secret[0].field();
    std::size_t block = secret.size() / static_cast<std::size_t>(params.m);
    int mt = params.m + params.t;

    std::vector<Share> shares(static_cast<std::size_t>(params.n));
    for (int i = 0; i < params.n; i++) {
        shares[static_cast<std::size_t>(i)].point = domain.alphas[static_cast<std::size_t>(i)];
        shares[static_cast<std::size_t>(i)].owner = i;
        shares[static_cast<std::size_t>(i)].value.assign(block, Fp(0, f));
    }

    FieldVector anchors(domain.betas.begin(), domain.betas.begin() + mt);
    FieldVector anchor_vals(static_cast<std::size_t>(mt));
    for (std::size_t c = 0; c < block; c++) {
        for (int j = 0; j < params.m; j++)
            anchor_vals[static_cast<std::size_t>(j)] =
                secret[static_cast<std::size_t>(j) * block + c];
        for (int j = 0; j < params.t; j++)
            anchor_vals[static_cast<std::size_t>(params.m + j)] = rng.field_element(f);
        std::vector<Fp> coeffs = lagrange_interpolate(anchors, anchor_vals);
        for (int i = 0; i < params.n; i++)
            shares[static_cast<std::size_t>(i)].value[c] =
                poly_eval(coeffs, domain.alphas[static_cast<std::size_t>(i)]);
    }
    return shares;
}

std::vector<FieldVector> reconstruct(const std::vector<Share>& shares, int deg,
                                     const FieldVector& targets) {
    if (static_cast<int>(shares.size()) < deg + 1)
        throw ThresholdError("not enough shares for degree");
    std::set<u128> seen;
    for (const auto& s : shares) {
        if (!seen.insert(s.point.value()).second) throw FieldError("duplicate share points");
    }
    std::size_t block = shares[0].value.size();
    FieldVector xs;
    xs.reserve(shares.size());
    for (const auto& s : shares) xs.push_back(s.point);

    std::vector<FieldVector> out(targets.size(), FieldVector(block));
    for (std::size_t ti = 0; ti < targets.size(); ti++) {
        FieldVector w = lagrange_weights(xs, targets[ti]);
        for (std::size_t c = 0; c < block; c++) {
            Fp acc(0, targets[ti].field());
            for (std::size_t i = 0; i < shares.size(); i++) acc += w[i] * shares[i].value[c];
            out[ti][c] = acc;
        }
    }
    return out;
}

FieldVector lcc_reconstruct_secret(const std::vector<Share>& shares, const SharingParams& params,
                                   const EvaluationDomain& domain) {
    FieldVector targets(domain.betas.begin(), domain.betas.begin() + params.m);
    auto blocks = reconstruct(shares, params.degree(), targets);
    FieldVector secret;
    for (const auto& b : blocks) secret.insert(secret.end(), b.begin(), b.end());
    return secret;
}

std::vector<Fp> eval_poly_on_shares(const std::vector<Fp>& share_values,
                                    const std::vector<Fp>& h_coeffs) {
    std::vector<Fp> out;
    out.reserve(share_values.size());
    for (const auto& v : share_values) out.push_back(poly_eval(h_coeffs, v));
    return out;
}

namespace {

// Gaussian elimination; returns one solution of A x = b or nullopt.
std::optional<std::vector<Fp>> solve_linear(std::vector<std::vector<Fp>> a, std::vector<Fp> b,
                                            const PrimeField& f) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col(rows, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; c++) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) piv++;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Fp inv = a[r][c].inv();
        for (std::size_t j = c; j < cols; j++) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; i++) {
            if (i == r || a[i][c].is_zero()) continue;
            Fp factor = a[i][c];
            for (std::size_t j = c; j < cols; j++) a[i][j] -= factor * a[r][j];
            b[i] -= factor * b[r];
        }
        pivot_col[r] = static_cast<int>(c);
        r++;
    }
    for (std::size_t i = r; i < rows; i++) {
        if (!b[i].is_zero()) return std::nullopt;  // inconsistent
    }
    std::vector<Fp> x(cols, Fp(0, f));  // free variables set to zero
    for (std::size_t i = 0; i < r; i++) x[static_cast<std::size_t>(pivot_col[i])] = b[i];
    return x;
}

// polynomial long division; returns quotient if remainder is zero
std::optional<std::vector<Fp>> poly_divide_exact(std::vector<Fp> num, const std::vector<Fp>& den,
                                                 const PrimeField& f) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    while (dn >= 0 && num[static_cast<std::size_t>(dn)].is_zero()) dn--;
    while (dd >= 0 && den[static_cast<std::size_t>(dd)].is_zero()) dd--;
    if (dd < 0) return std::nullopt;
    if (dn < dd) {
        for (int i = 0; i <= dn; i++)
            if (!num[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
        return std::vector<Fp>{Fp(0, f)};
    }
    std::vector<Fp> q(static_cast<std::size_t>(dn - dd) + 1, Fp(0, f));
    Fp lead_inv = den[static_cast<std::size_t>(dd)].inv();
    for (int k = dn - dd; k >= 0; k--) {
        Fp coef = num[static_cast<std::size_t>(k + dd)] * lead_inv;
        q[static_cast<std::size_t>(k)] = coef;
        for (int j = 0; j <= dd; j++)
            num[static_cast<std::size_t>(k + j)] -= coef * den[static_cast<std::size_t>(j)];
    }
    for (const auto& c : num)
        if (!c.is_zero()) return std::nullopt;
    return q;
}

}  // namespace

std::optional<RsResult> rs_decode(const FieldVector& points, const FieldVector& values, int deg) {
    if (points.size() != values.size()) throw FieldError("rs_decode size mismatch");
    int n_pts = static_cast<int>(points.size());
    int k = deg + 1;
    if (n_pts < k) throw ThresholdError("rs_decode: fewer points than degree+1");
    const PrimeField& f = points[0].field();
    int b_max = (n_pts - k) / 2;

    // key equation Q(x_i) = y_i * E(x_i) with monic deg-b E, deg(Q) <= k-1+b
    for (int b = b_max; b >= 0; b--) {
        std::size_t n_unknown = static_cast<std::size_t>(k + 2 * b);
        std::vector<std::vector<Fp>> a(static_cast<std::size_t>(n_pts),
                                       std::vector<Fp>(n_unknown, Fp(0, f)));
        std::vector<Fp> rhs(static_cast<std::size_t>(n_pts), Fp(0, f));
        for (int i = 0; i < n_pts; i++) {
            Fp xp(1, f);
            for (int j = 0; j < k + b; j++) {  // Q coefficients
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = xp;
                xp *= points[static_cast<std::size_t>(i)];
            }
            xp = Fp(1, f);
            for (int j = 0; j < b; j++) {  // E coefficients (monic, degree b)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + b + j)] =
                    -(values[static_cast<std::size_t>(i)] * xp);
                xp *= points[static_cast<std::size_t>(i)];
            }
            rhs[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(i)] * xp;
        }
        auto sol = solve_linear(std::move(a), std::move(rhs), f);
        if (!sol) continue;
        std::vector<Fp> q_coeffs(sol->begin(), sol->begin() + (k + b));
        std::vector<Fp> e_coeffs(sol->begin() + (k + b), sol->end());
        e_coeffs.emplace_back(1, f);  // monic
        auto p_coeffs = poly_divide_exact(q_coeffs, e_coeffs, f);
        if (!p_coeffs) continue;
        p_coeffs->resize(static_cast<std::size_t>(k), Fp(0, f));
        if (static_cast<int>(p_coeffs->size()) > k) continue;

        RsResult res;
        res.coeffs = *p_coeffs;
        for (int i = 0; i < n_pts; i++) {
            if (poly_eval(res.coeffs, points[static_cast<std::size_t>(i)]) !=
                values[static_cast<std::size_t>(i)])
                res.error_positions.push_back(i);
        }
        if (static_cast<int>(res.error_positions.size()) <= b_max) return res;
    }
    return std::nullopt;
}

ItvssDealing itvss_distribute(const FieldVector& secret, const SharingParams& params,
                              const EvaluationDomain& domain, Rng& rng) {
    params.validate();
    domain.validate(params);
    if (secret.size() % static_cast<std::size_t>(params.m) != 0)
        throw ConfigError("secret length not divisible by m (zero-pad first)");
    const PrimeField& f = secret[0].field();
    std::size_t block = secret.size() / static_cast<std::size_t>(params.m);
    int deg = params.degree();
    std::size_t dp1 = static_cast<std::size_t>(deg) + 1;
    int mt = params.m + params.t;

    ItvssDealing dealing;
    dealing.f_polys.assign(static_cast<std::size_t>(params.n),
                           std::vector<std::vector<Fp>>(block));

    FieldVector anchors(domain.betas.begin(), domain.betas.begin() + mt);
    for (std::size_t c = 0; c < block; c++) {
        // univariate LCC polynomial F through the secret and randomness anchors
        FieldVector anchor_vals(static_cast<std::size_t>(mt));
        for (int j = 0; j < params.m; j++)
            anchor_vals[static_cast<std::size_t>(j)] =
                secret[static_cast<std::size_t>(j) * block + c];
        for (int j = 0; j < params.t; j++)
            anchor_vals[static_cast<std::size_t>(params.m + j)] = rng.field_element(f);
        std::vector<Fp> fc = lagrange_interpolate(anchors, anchor_vals);
        fc.resize(dp1, Fp(0, f));

        // symmetric bivariate S with S(x, 0) = F(x): C[a][0] = C[0][a] = F_a,
        // upper triangle uniform
        std::vector<std::vector<Fp>> coef(dp1, std::vector<Fp>(dp1, Fp(0, f)));
        for (std::size_t a = 0; a < dp1; a++) coef[a][0] = coef[0][a] = fc[a];
        for (std::size_t a = 1; a < dp1; a++) {
            for (std::size_t b = a; b < dp1; b++) {
                Fp r = rng.field_element(f);
                coef[a][b] = r;
                coef[b][a] = r;
            }
        }
        // recipient i gets f_i(y) = S(alpha_i, y)
        for (int i = 0; i < params.n; i++) {
            const Fp& alpha = domain.alphas[static_cast<std::size_t>(i)];
            std::vector<Fp> fi(dp1, Fp(0, f));
            Fp ap(1, f);
            for (std::size_t a = 0; a < dp1; a++) {
                for (std::size_t b = 0; b < dp1; b++) fi[b] += coef[a][b] * ap;
                ap *= alpha;
            }
            dealing.f_polys[static_cast<std::size_t>(i)][c] = std::move(fi);
        }
    }
    return dealing;
}

Share itvss_main_share(const ItvssDealing& dealing, int recipient,
                       const EvaluationDomain& domain) {
    const auto& polys = dealing.f_polys[static_cast<std::size_t>(recipient)];
    Share s;
    s.owner = recipient;
    s.point = domain.alphas[static_cast<std::size_t>(recipient)];
    const PrimeField& f = s.point.field();
    Fp zero(0, f);
    for (const auto& fi : polys) s.value.push_back(poly_eval(fi, zero));
    return s;
}

std::vector<int> itvss_verify(const std::vector<std::optional<ItvssDealing>>& dealings,
                              const std::vector<int>& recipients,
                              const EvaluationDomain& domain) {
    std::vector<int> accused;
    for (std::size_t dealer = 0; dealer < dealings.size(); dealer++) {
        if (!dealings[dealer]) continue;
        const auto& d = *dealings[dealer];
        bool bad = false;
        for (std::size_t ii = 0; ii < recipients.size() && !bad; ii++) {
            for (std::size_t jj = ii + 1; jj < recipients.size() && !bad; jj++) {
                int i = recipients[ii], j = recipients[jj];
                const auto& pi = d.f_polys[static_cast<std::size_t>(i)];
                const auto& pj = d.f_polys[static_cast<std::size_t>(j)];
                for (std::size_t c = 0; c < pi.size(); c++) {
                    Fp fij = poly_eval(pi[c], domain.alphas[static_cast<std::size_t>(j)]);
                    Fp fji = poly_eval(pj[c], domain.alphas[static_cast<std::size_t>(i)]);
                    if (fij != fji) {
                        bad = true;
                        break;
                    }
                }
            }
        }
        if (bad) accused.push_back(static_cast<int>(dealer));
    }
    return accused;
}

std::vector<Fp> rerandomize(const std::vector<Fp>& shares, const std::vector<int>& contributors,
                            int input_deg, int target_deg, const SharingParams& params,
                            const EvaluationDomain& domain, Rng& rng,
                            const SubShareObserver& observer) {
    if (params.m != 1) throw ConfigError("rerandomize supports m = 1 only");
    if (static_cast<int>(contributors.size()) < input_deg + 1)
        throw ThresholdError("rerandomize: not enough contributors");
    const PrimeField& f = domain.betas[0].field();

    FieldVector xs;
    for (int c : contributors) xs.push_back(domain.alphas[static_cast<std::size_t>(c)]);
    FieldVector w = lagrange_weights(xs, domain.betas[0]);

    std::vector<Fp> out(shares.size(), Fp(0, f));
    for (std::size_t ci = 0; ci < contributors.size(); ci++) {
        int dealer = contributors[ci];
        std::vector<Fp> sub =
            share_scalar_at_degree(shares[static_cast<std::size_t>(dealer)], target_deg, domain, rng);
        for (std::size_t j = 0; j < out.size(); j++) {
            if (observer) observer(dealer, static_cast<int>(j), sub[j]);
            out[j] += w[ci] * sub[j];
        }
    }
    return out;
}

}  // namespace itfl
