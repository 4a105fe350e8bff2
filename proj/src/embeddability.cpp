#include "steinerlab/embeddability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "steinerlab/errors.hpp"

namespace steinerlab {

namespace {

constexpr double kSlack = 1e-12;

struct Checker {
    std::vector<std::string> violations;

    void require(bool ok, const std::string& name) {
        if (!ok) violations.push_back(name);
    }
    void le(double lhs, double rhs, const std::string& name) { require(lhs <= rhs + kSlack, name); }
};

void require_positive(const EmbeddabilityTuple& t) {
    const double vals[] = {t.alpha_x, t.alpha_p, t.beta_in, t.beta_out,
                           t.gamma0,  t.gamma1,  t.gamma2,  t.tau};
    for (double v : vals)
        if (!(v > 0.0) || !std::isfinite(v))
            throw ValidationError("embeddability tuple entries must be positive reals");
}

}  // namespace

TupleCheck is_metric_compatible(const EmbeddabilityTuple& t) {
    require_positive(t);
    Checker c;
    const double g[3] = {t.gamma0, t.gamma1, t.gamma2};
    const char* gn[3] = {"gamma0", "gamma1", "gamma2"};

    c.le(t.alpha_x, std::min(t.alpha_p + t.beta_in, t.alpha_p + t.beta_out),
         "alpha_x <= min(alpha_p + beta_in, alpha_p + beta_out)");
    c.le(t.alpha_p, std::min(t.alpha_x + t.beta_in, t.alpha_x + t.beta_out),
         "alpha_p <= min(alpha_x + beta_in, alpha_x + beta_out)");

    for (int i = 0; i < 3; ++i) {
        std::ostringstream in_name, out_name;
        in_name << "beta_in <= " << gn[i] << " + beta_out";
        out_name << "beta_out <= " << gn[i] << " + beta_in";
        c.le(t.beta_in, g[i] + t.beta_out, in_name.str());
        c.le(t.beta_out, g[i] + t.beta_in, out_name.str());
    }
    c.le(t.beta_in, std::min(t.alpha_x + t.alpha_p, t.beta_out + t.tau),
         "beta_in <= min(alpha_x + alpha_p, beta_out + tau)");
    c.le(t.beta_out, std::min(t.alpha_x + t.alpha_p, t.beta_in + t.tau),
         "beta_out <= min(alpha_x + alpha_p, beta_in + tau)");

    // Facility triples: overlaps (i | j, k) must be realizable by three
    // distinct 3-sets, which rules out exactly the {0, 2, 2} pattern.
    for (int i = 0; i < 3; ++i) {
        c.le(g[i], 2.0 * t.alpha_x, std::string(gn[i]) + " <= 2*alpha_x");
        c.le(g[i], 2.0 * t.beta_out, std::string(gn[i]) + " <= 2*beta_out");
        if (i > 0) c.le(g[i], 2.0 * t.beta_in, std::string(gn[i]) + " <= 2*beta_in");
        for (int j = 0; j < 3; ++j)
            for (int k = j; k < 3; ++k) {
                const bool forbidden = (i == 0 && j == 2 && k == 2) ||
                                       (j == 0 && i == 2 && k == 2) ||
                                       (k == 0 && i == 2 && j == 2);
                if (forbidden) continue;
                std::ostringstream name;
                name << gn[i] << " <= " << gn[j] << " + " << gn[k];
                c.le(g[i], g[j] + g[k], name.str());
            }
    }
    // gamma0 via a terminal needs a member/non-member pair, never two members.
    c.le(t.gamma0, t.beta_in + t.beta_out, "gamma0 <= beta_in + beta_out");

    c.le(t.tau, std::min({2.0 * t.alpha_p, 2.0 * t.beta_in, 2.0 * t.beta_out}),
         "tau <= min(2*alpha_p, 2*beta_in, 2*beta_out)");

    TupleCheck out;
    out.violations = std::move(c.violations);
    out.ok = out.violations.empty();
    return out;
}

TupleCheck is_steiner_embeddable(const EmbeddabilityTuple& t) {
    TupleCheck out = is_metric_compatible(t);
    Checker c;
    c.le(t.alpha_x, 1.5 * t.gamma2, "P1: alpha_x <= 3*gamma2/2");
    c.le(t.alpha_x,
         std::min({t.alpha_p, t.beta_in, t.beta_out, t.gamma0, t.gamma1, t.tau}),
         "P1: alpha_x <= alpha_p, beta_in, beta_out, gamma0, gamma1, tau");
    c.le(t.alpha_p, t.beta_out, "P2: alpha_p <= beta_out");

    // P3 is strict; margins inside the 1e-12 band are reported as boundary.
    const double margin = std::min(t.alpha_p, t.tau) - (t.beta_in + t.alpha_x / 3.0);
    if (margin <= -kSlack)
        c.violations.push_back("P3: beta_in + alpha_x/3 < min(alpha_p, tau)");
    else if (margin < kSlack) {
        out.boundary = true;
        c.violations.push_back("P3: boundary (margin within 1e-12)");
    }

    c.le(std::min(t.alpha_p, t.tau), t.beta_in + t.gamma2,
         "P4: min(alpha_p, tau) <= beta_in + gamma2");

    out.violations.insert(out.violations.end(), c.violations.begin(), c.violations.end());
    out.ok = out.violations.empty();
    return out;
}

}  // namespace steinerlab
