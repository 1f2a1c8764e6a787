#include "jetinv/forms.hpp"

#include <json.hpp>

namespace jetinv {

// ---------------------------------------------------------------------------
// FormCoeff
// ---------------------------------------------------------------------------

FormCoeff FormCoeff::constant(int n, RatFun c) {
    FormCoeff f(n);
    if (!c.is_zero()) f.terms_[{}] = std::move(c);
    return f;
}

FormCoeff FormCoeff::xvar(int n, int i) {
    FormCoeff f(n);
    f.terms_[{{i, 1}}] = RatFun::one();
    return f;
}

FormCoeff FormCoeff::pvar(int n, int i) {
    FormCoeff f(n);
    f.terms_[{{n + i, 1}}] = RatFun::one();
    return f;
}

void FormCoeff::add_term(const Mono& m, const RatFun& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FormCoeff FormCoeff::operator-() const {
    FormCoeff f(n_);
    for (const auto& [m, c] : terms_) f.terms_[m] = -c;
    return f;
}

FormCoeff& FormCoeff::operator+=(const FormCoeff& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FormCoeff& FormCoeff::operator-=(const FormCoeff& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FormCoeff operator*(const FormCoeff& a, const FormCoeff& b) {
    FormCoeff out(a.n_ ? a.n_ : b.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            FormCoeff::Mono m;
            std::size_t i = 0, j = 0;
            while (i < ma.size() && j < mb.size()) {
                if (ma[i].first == mb[j].first) {
                    m.emplace_back(ma[i].first, ma[i].second + mb[j].second);
                    ++i, ++j;
                } else if (ma[i].first < mb[j].first) {
                    m.push_back(ma[i++]);
                } else {
                    m.push_back(mb[j++]);
                }
            }
            for (; i < ma.size(); ++i) m.push_back(ma[i]);
            for (; j < mb.size(); ++j) m.push_back(mb[j]);
            out.add_term(m, ca * cb);
        }
    return out;
}

FormCoeff FormCoeff::d_var(int var) const {
    FormCoeff out(n_);
    for (const auto& [mono, c] : terms_) {
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (mono[k].first != var) continue;
            Mono m = mono;
            RatFun coef = c * RatFun(Rat(mono[k].second));
            if (--m[k].second == 0) m.erase(m.begin() + static_cast<long>(k));
            out.add_term(m, coef);
        }
    }
    return out;
}

FormCoeff FormCoeff::d_u() const {
    FormCoeff out(n_);
    for (const auto& [mono, c] : terms_) out.add_term(mono, c.derivative());
    return out;
}

bool FormCoeff::depends_on_x() const {
    for (const auto& [mono, c] : terms_)
        for (const auto& [var, e] : mono)
            if (var < n_) return true;
    return false;
}

std::string FormCoeff::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mono, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (const auto& [var, e] : mono) {
            s += var < n_ ? "*x" + std::to_string(var + 1) : "*p" + std::to_string(var - n_ + 1);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// J1Algebra
// ---------------------------------------------------------------------------

std::vector<std::function<FormCoeff(const FormCoeff&)>> J1Algebra::partials() const {
    std::vector<std::function<FormCoeff(const FormCoeff&)>> out;
    for (int i = 0; i < n_; ++i)
        out.push_back([i](const FormCoeff& c) { return c.d_var(i); });
    out.push_back([](const FormCoeff& c) { return c.d_u(); });
    for (int i = 0; i < n_; ++i)
        out.push_back([this, i](const FormCoeff& c) { return c.d_var(n_ + i); });
    return out;
}

std::vector<FormCoeff> J1Algebra::char_field() const {
    std::vector<FormCoeff> x(static_cast<std::size_t>(ncov()), FormCoeff(n_));
    for (int i = 0; i < n_; ++i) x[static_cast<std::size_t>(i)] = FormCoeff::pvar(n_, i);
    x[static_cast<std::size_t>(n_)] = FormCoeff::constant(n_, RatFun::one());
    return x;
}

ExtForm J1Algebra::omega1(const RatFun& f) const {
    ExtForm acc(ncov(), n_);
    for (int i = 0; i < n_; ++i) {
        ExtForm term = scalar(FormCoeff::constant(n_, RatFun::one()));
        for (int pos = 0; pos < n_; ++pos) term = wedge(term, pos == i ? dp(pos) : dx(pos));
        acc += term;
    }
    acc -= top_dx(f);
    return acc;
}

ExtForm J1Algebra::closed_form(int k, const RatFun& g) const {
    ExtForm acc(ncov(), n_);
    // iterate over all k-subsets of {0..n-1}
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    Rat fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    for (;;) {
        ExtForm term = scalar(FormCoeff::constant(n_, RatFun(fact)));
        int pos_in_subset = 0;
        for (int pos = 0; pos < n_; ++pos) {
            bool in = pos_in_subset < k && idx[static_cast<std::size_t>(pos_in_subset)] == pos;
            term = wedge(term, in ? dp(pos) : dx(pos));
            if (in) ++pos_in_subset;
        }
        acc += term;
        int move = k - 1;
        while (move >= 0 && idx[static_cast<std::size_t>(move)] == n_ - k + move) --move;
        if (move < 0) break;
        ++idx[static_cast<std::size_t>(move)];
        for (int q = move + 1; q < k; ++q)
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
    acc -= top_dx(g);
    return acc;
}

ExtForm J1Algebra::top_dx(const RatFun& g) const {
    ExtForm term = scalar(FormCoeff::constant(n_, g));
    for (int pos = 0; pos < n_; ++pos) term = wedge(term, dx(pos));
    return term;
}

std::string J1Algebra::to_json(const ExtForm& a) const {
    auto cov_name = [&](int id) {
        if (id < n_) return "dx" + std::to_string(id + 1);
        if (id == n_) return std::string("du");
        return "dp" + std::to_string(id - n_);
    };
    nlohmann::json j;
    j["degree"] = a.degree();
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [key, c] : a.terms()) {
        std::string name;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) name += "^";
            name += cov_name(key[i]);
        }
        terms[name] = c.str();
    }
    j["terms"] = terms;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Omega recursion
// ---------------------------------------------------------------------------

OmegaReport omega_recursion(int n, const std::vector<Rat>& alphas) {
    if (n < 2 || n > 4) throw UnsupportedDimension("omega recursion supports n in {2,3,4}");
    CompatConfig cfg{n, alphas};
    cfg.validate();
    RatFun f = cfg.f();
    J1Algebra alg(n);

    OmegaReport rep;
    rep.omegas.push_back(alg.omega1(f));
    rep.matches_closed.push_back(rep.omegas[0] == alg.closed_form(1, f));
    for (int k = 2; k <= n + 1; ++k) {
        // correction coefficient (D+f)^{k-2}(f) = (D+f)^{k-1}(1)
        RatFun corr = dplusf_iterate(f, RatFun::one(), k - 1);
        ExtForm next = alg.lie_x(rep.omegas.back()) + rep.omegas[0].scaled(
                           FormCoeff::constant(n, corr));
        rep.omegas.push_back(next);
        RatFun top = dplusf_iterate(f, RatFun::one(), k); // (D+f)^{k-1}(f)
        if (k <= n) {
            rep.matches_closed.push_back(next == alg.closed_form(k, top));
        } else {
            rep.matches_closed.push_back(next == alg.top_dx(top).scaled(FormCoeff::constant(
                                                      n, RatFun(Rat(-1)))));
        }
    }
    rep.omega_np1_zero = rep.omegas.back().is_zero();
    // dx-coefficient of Omega_{n+1} (single term, up to sign)
    std::vector<int> top_key;
    for (int i = 0; i < n; ++i) top_key.push_back(i);
    FormCoeff tc = rep.omegas.back().coeff(top_key);
    RatFun tcr;
    for (const auto& [mono, c] : tc.terms())
        if (mono.empty()) tcr = c;
    rep.top_coefficient = tcr;
    return rep;
}

// ---------------------------------------------------------------------------
// Contact reduction, n = 2
// ---------------------------------------------------------------------------

namespace {

/// Chart data of the rational circle: p1, p2 and their t-derivatives.
struct CircleChart {
    RatFun p1, p2, dp1, dp2;

    CircleChart() {
        UniPoly one_plus = UniPoly({Rat(1), Rat(0), Rat(1)});  // 1 + t^2
        UniPoly one_minus = UniPoly({Rat(1), Rat(0), Rat(-1)}); // 1 - t^2
        UniPoly two_t = UniPoly({Rat(0), Rat(2)});
        p1 = RatFun(one_minus, one_plus);
        p2 = RatFun(two_t, one_plus);
        dp1 = p1.derivative();
        dp2 = p2.derivative();
    }
};

std::vector<std::function<RatFun(const RatFun&)>> chart_partials() {
    // coordinates (x1, x2, t); coefficients are rational in t only
    return {
        [](const RatFun&) { return RatFun::zero(); },
        [](const RatFun&) { return RatFun::zero(); },
        [](const RatFun& c) { return c.derivative(); },
    };
}

/// Pulls a J^1(R^2) form to the chart: x_i -> x_i, u -> u0 (du -> 0),
/// p_i -> p_i(t), dp_i -> p_i'(t) dt. Coefficients must be x-free.
GForm<RatFun> pull_to_chart(const ExtForm& a, const Rat& u0, const CircleChart& ch) {
    const int n = 2;
    std::vector<GForm<RatFun>> images;
    images.push_back(GForm<RatFun>::covector(3, 0, RatFun::one())); // dx1
    images.push_back(GForm<RatFun>::covector(3, 1, RatFun::one())); // dx2
    images.push_back(GForm<RatFun>(3, 1));                          // du -> 0
    images.push_back(GForm<RatFun>::covector(3, 2, ch.dp1));        // dp1
    images.push_back(GForm<RatFun>::covector(3, 2, ch.dp2));        // dp2
    auto coeff_image = [&](const FormCoeff& c) {
        if (c.depends_on_x()) throw Error("chart pullback expects x-free coefficients");
        RatFun acc;
        for (const auto& [mono, rf] : c.terms()) {
            RatFun t(rf.eval(u0));
            for (const auto& [var, e] : mono) {
                const RatFun& base = (var - n == 0) ? ch.p1 : ch.p2;
                for (int r = 0; r < e; ++r) t = t * base;
            }
            acc += t;
        }
        return acc;
    };
    GForm<RatFun> out(3, a.degree());
    for (const auto& [key, c] : a.terms()) {
        GForm<RatFun> w = GForm<RatFun>::scalar(3, coeff_image(c));
        for (int id : key) {
            int img = id < n ? id : (id == n ? 2 : 3 + (id - n - 1));
            w = wedge(w, images[static_cast<std::size_t>(img)]);
        }
        out += w;
    }
    return out;
}

} // namespace

ContactReport contact_reduction_n2(const Rat& u0, const std::vector<Rat>& sample_ts) {
    if (is_zero(u0)) throw BadConfig("the section constant u0 must be nonzero");
    CircleChart ch;
    ContactReport rep;
    rep.u0 = u0;

    // theta = p1 dp2 - p2 dp1 - (1/u)(p1 dx2 - p2 dx1), in the chart
    GForm<RatFun> dt = GForm<RatFun>::covector(3, 2, RatFun::one());
    GForm<RatFun> dx1 = GForm<RatFun>::covector(3, 0, RatFun::one());
    GForm<RatFun> dx2 = GForm<RatFun>::covector(3, 1, RatFun::one());
    RatFun inv_u(Rat(1) / u0);
    GForm<RatFun> theta = dt.scaled(ch.p1 * ch.dp2 - ch.p2 * ch.dp1);
    theta -= dx2.scaled(inv_u * ch.p1);
    theta += dx1.scaled(inv_u * ch.p2);
    rep.theta = theta;

    GForm<RatFun> ttd = wedge(theta, theta.exterior_derivative(chart_partials()));
    rep.theta_wedge_dtheta = ttd.coeff({0, 1, 2});
    rep.certificate_nonzero = !rep.theta_wedge_dtheta.is_zero();
    for (const Rat& t : sample_ts) {
        Rat v = rep.theta_wedge_dtheta.eval(t);
        rep.certificate.emplace_back(t, v);
        if (is_zero(v)) rep.certificate_nonzero = false;
    }

    // theta_0 = i_X Omega_0 = p1 dp1 + p2 dp2 dies in the chart
    RatFun t0 = ch.p1 * ch.dp1 + ch.p2 * ch.dp2;
    rep.theta0_vanishes = t0.is_zero();

    // derived check: theta is the chart pullback of i_X Omega_1 with f = 1/u
    J1Algebra alg(2);
    RatFun f = RatFun::simple_pole(Rat(0)); // 1/u
    ExtForm ixo1 = alg.i_x(alg.omega1(f));
    rep.matches_pullback = pull_to_chart(ixo1, u0, ch) == theta;
    return rep;
}

// ---------------------------------------------------------------------------
// Section forms, n = 3
// ---------------------------------------------------------------------------

SectionReport section_forms_n3(const Rat& alpha) {
    SectionReport rep;
    const int n2 = 2;
    J1Algebra alg2(n2);
    // f = 2u/(u^2 - alpha^2), f' + f^2 = 2/(u^2 - alpha^2)
    UniPoly den({-(alpha * alpha), Rat(0), Rat(1)});
    RatFun f3(UniPoly({Rat(0), Rat(2)}), den);
    RatFun one_over(UniPoly::constant(1), den);

    auto c = [&](const RatFun& r) { return FormCoeff::constant(n2, r); };
    auto p1 = FormCoeff::pvar(n2, 0);
    auto p2 = FormCoeff::pvar(n2, 1);
    FormCoeff one = FormCoeff::constant(n2, RatFun::one());
    FormCoeff p3sq = one - p1 * p1 - p2 * p2;

    ExtForm dx1 = alg2.dx(0), dx2 = alg2.dx(1), dp1 = alg2.dp(0), dp2 = alg2.dp(1);

    // theta'_1 = ((1-p2^2)dp1 + p1p2 dp2)^dx2 + dx1^(p1p2 dp1 + (1-p1^2)dp2)
    //            - f (1-p1^2-p2^2) dx1^dx2
    rep.theta1 = wedge(dp1.scaled(one - p2 * p2) + dp2.scaled(p1 * p2), dx2) +
                 wedge(dx1, dp1.scaled(p1 * p2) + dp2.scaled(one - p1 * p1)) -
                 wedge(dx1, dx2).scaled(p3sq * c(f3));
    // theta'_2 = dp1^dp2 - ((1-p1^2-p2^2)/(u^2-a^2)) dx1^dx2
    rep.theta2 = wedge(dp1, dp2) - wedge(dx1, dx2).scaled(p3sq * c(one_over));

    // Monge-Ampere payload (graph substitution dp_i -> sum_j u_ij dx_j):
    // coefficient of dx1^dx2 becomes a uxx + b uxy + c uyy + q det(Hess) + rhs
    auto signed_coeff = [&](const ExtForm& fm, int i, int jx) {
        // coefficient of dp_i ^ dx_j with orientation dp_i before dx_j
        std::vector<int> key{jx, n2 + 1 + i};
        FormCoeff v = fm.coeff(key);
        return -v; // stored key is dx_j ^ dp_i
    };
    {
        FormCoeff m11 = signed_coeff(rep.theta1, 0, 0);
        FormCoeff m12 = signed_coeff(rep.theta1, 0, 1);
        FormCoeff m21 = signed_coeff(rep.theta1, 1, 0);
        FormCoeff m22 = signed_coeff(rep.theta1, 1, 1);
        rep.ma1_uxx = m12;
        rep.ma1_uxy = m22 - m11;
        rep.ma1_uyy = -m21;
        rep.ma1_rhs = -rep.theta1.coeff({0, 1});
    }
    rep.ma2_rhs = -rep.theta2.coeff({0, 1});

    // pullback certification over the quadratic extension
    J1Algebra alg3(3);
    ExtForm omega1 = alg3.omega1(f3);
    ExtForm omega2 = alg3.lie_x(omega1) + omega1.scaled(FormCoeff::constant(3, f3));
    ExtForm half_ix_omega2 = alg3.i_x(omega2).scaled(
        FormCoeff::constant(3, RatFun(rat(1, 2))));
    ExtForm ix_omega1 = alg3.i_x(omega1);

    struct SamplePoint {
        Rat p1, p2, u;
    };
    std::vector<SamplePoint> pts = {
        {rat(3, 5), Rat(0), Rat(2)},   {rat(1, 3), rat(1, 4), Rat(3)},
        {rat(-2, 5), rat(1, 2), Rat(2)}, {rat(1, 7), rat(-3, 7), rat(5, 2)},
        {rat(-1, 4), rat(-1, 3), Rat(4)},
    };

    auto eval_2form_chart = [&](const ExtForm& a3, const SamplePoint& pt, bool weight_p3) {
        Rat s = Rat(1) - pt.p1 * pt.p1 - pt.p2 * pt.p2;
        QuadExt p3(Rat(0), Rat(1), s);
        std::vector<QuadExt> xs(3, QuadExt(Rat(0)));
        std::vector<QuadExt> ps = {QuadExt(pt.p1), QuadExt(pt.p2), p3};
        // chart covectors: 0 dx1, 1 dx2, 2 du, 3 dp1, 4 dp2
        std::vector<GForm<QuadExt>> images;
        images.push_back(GForm<QuadExt>::covector(5, 0, QuadExt(Rat(1)))); // dx1
        images.push_back(GForm<QuadExt>::covector(5, 1, QuadExt(Rat(1)))); // dx2
        images.push_back(GForm<QuadExt>(5, 1));                            // dx3 -> 0
        images.push_back(GForm<QuadExt>::covector(5, 2, QuadExt(Rat(1)))); // du
        images.push_back(GForm<QuadExt>::covector(5, 3, QuadExt(Rat(1)))); // dp1
        images.push_back(GForm<QuadExt>::covector(5, 4, QuadExt(Rat(1)))); // dp2
        // dp3 = -(p1 dp1 + p2 dp2)/p3
        QuadExt inv_p3 = p3.inverse();
        GForm<QuadExt> dp3 = GForm<QuadExt>::covector(5, 3, -(QuadExt(pt.p1) * inv_p3)) +
                             GForm<QuadExt>::covector(5, 4, -(QuadExt(pt.p2) * inv_p3));
        images.push_back(dp3);
        GForm<QuadExt> out(5, a3.degree());
        for (const auto& [key, coeff] : a3.terms()) {
            GForm<QuadExt> w = GForm<QuadExt>::scalar(5, coeff.eval(xs, ps, pt.u));
            for (int id : key) w = wedge(w, images[static_cast<std::size_t>(id)]);
            out += w;
        }
        if (weight_p3) out = out.scaled(p3);
        return out;
    };
    auto eval_theta_chart = [&](const ExtForm& a2, const SamplePoint& pt) {
        std::vector<QuadExt> xs(2, QuadExt(Rat(0)));
        std::vector<QuadExt> ps = {QuadExt(pt.p1), QuadExt(pt.p2)};
        GForm<QuadExt> out(5, a2.degree());
        for (const auto& [key, coeff] : a2.terms()) {
            GForm<QuadExt> w = GForm<QuadExt>::scalar(5, coeff.eval(xs, ps, pt.u));
            for (int id : key) {
                int img = id < 2 ? id : (id == 2 ? 2 : 3 + (id - 3));
                w = wedge(w, GForm<QuadExt>::covector(5, img, QuadExt(Rat(1))));
            }
            out += w;
        }
        return out;
    };

    rep.pullback_match1 = rep.pullback_match2 = true;
    for (const auto& pt : pts) {
        Rat s = Rat(1) - pt.p1 * pt.p1 - pt.p2 * pt.p2;
        if (sgn(s) <= 0) continue;
        if (pt.u == alpha || pt.u == -alpha) continue;
        ++rep.samples_checked;
        if (!(eval_2form_chart(ix_omega1, pt, true) == eval_theta_chart(rep.theta1, pt)))
            rep.pullback_match1 = false;
        if (!(eval_2form_chart(half_ix_omega2, pt, true) == eval_theta_chart(rep.theta2, pt)))
            rep.pullback_match2 = false;
    }
    return rep;
}

} // namespace jetinv
