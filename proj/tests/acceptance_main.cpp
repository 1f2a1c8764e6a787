// Acceptance runner: executes every acceptance criterion at its stated size
// and tolerance and prints one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <cstdio>
#include <iostream>
#include <string>

#include "jetinv/suites.hpp"

using namespace jetinv;

namespace {

int g_failures = 0;

void line(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

Report run(const std::string& suite, int n, int order, int trials, std::uint64_t seed,
           int s = 0, std::vector<Rat> alphas = {}) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.n = n;
    cfg.order = order;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.s = s;
    cfg.alphas = std::move(alphas);
    return run_suite(cfg);
}

} // namespace

int main() {
    // 1. exact invariance of the whole catalog under random motions
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3, 4})
            for (int order : {2, 3, 4}) {
                Report rep = run("invariance", n, order, 50, 42);
                if (rep.failure_count != 0) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " order=" + std::to_string(order) + ": " +
                             std::to_string(rep.failure_count) + " failures";
                }
            }
        line(1, "catalog invariance, 50 jets x 5 motions, n in {2,3,4}, order in {2,3,4}", ok,
             detail);
    }

    // 2. independence counts, unconstrained and on E
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3}) {
            Report rep = run("counts", n, 4, 1, 5);
            if (rep.failure_count != 0) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        line(2, "Jacobian ranks reproduce the dimension counts, n in {2,3}", ok, detail);
    }

    // 3. algebraic identities at 100 random jets
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3}) {
            Report rep = run("lowrel", n, 3, 100, 42);
            if (rep.failure_count != 0) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": " + std::to_string(rep.failure_count) +
                         " failures";
            }
        }
        line(3, "Newton-Girard, Cayley-Hamilton, pair collapse and v-relations at 100 jets", ok,
             detail);
    }

    // 4. main-relation oracle, 50 regular jets per (n, s)
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3})
            for (int s : {2, 3}) {
                Report rep = run("syzygy", n, 0, 50, 42, s);
                if (rep.failure_count != 0) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " s=" + std::to_string(s);
                }
            }
        line(4, "Leibniz-rule oracle closes the main relation exactly, 50 jets per (n,s)", ok,
             detail);
    }

    // 5. eikonal vanishing at 100 prolonged samples
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3}) {
            Report rep = run("eikonal", n, 4, 50, 7);
            if (rep.failure_count != 0) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": " + std::to_string(rep.failure_count) +
                         " failures";
            }
        }
        line(5, "singular vanishing and e1.I0 = 1 at 100 eikonal samples", ok, detail);
    }

    // 6. compatibility ODE and spectrum identities, n <= 5
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3, 4, 5}) {
            Report rep = run("compat", n, 3, 20, 11);
            if (rep.failure_count != 0) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        line(6, "(D+f)^{n+1}(1) = 0 for the pole family, sharpness, spectrum identities", ok,
             detail);
    }

    // 7. Omega recursion against the closed forms; contact certificate
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3}) {
            Report rep = run("forms", n, 3, 1, 42);
            if (rep.failure_count != 0) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        line(7, "Omega closed forms coefficient-exact, Omega_{n+1} = 0, theta^dtheta != 0", ok,
             detail);
    }

    // 8. numeric cross-checks: eigen vs traces, frame identity on E,
    //    structure-constant invariance
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3}) {
            Report rep = run("frames", n, 3, 50, 13);
            if (rep.failure_count != 0) {
                ok = false;
                detail = "frames n=" + std::to_string(n);
            }
        }
        for (int n : {2, 3}) {
            Report rep = run("eikonal", n, 3, 20, 23);
            if (rep.failure_count != 0) {
                ok = false;
                detail = "eikonal n=" + std::to_string(n);
            }
        }
        line(8, "eigen/trace agreement (1e-9), frame nabla Q2 = Q3 on E (1e-4), structure "
                "constants (1e-9 / exact)",
             ok, detail);
    }

    // 9. determinism: identical configs give identical bytes
    {
        SuiteConfig cfg;
        cfg.suite = "invariance";
        cfg.n = 2;
        cfg.order = 3;
        cfg.trials = 5;
        cfg.seed = 42;
        bool ok = run_suite(cfg).to_json() == run_suite(cfg).to_json();
        cfg.suite = "compat";
        ok = ok && run_suite(cfg).to_json() == run_suite(cfg).to_json();
        cfg.suite = "eikonal";
        ok = ok && run_suite(cfg).to_json() == run_suite(cfg).to_json();
        line(9, "suite re-runs with identical config are byte-identical", ok);
    }

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
    } else {
        std::cout << g_failures << " acceptance criteria FAILED" << std::endl;
    }
    return g_failures;
}
