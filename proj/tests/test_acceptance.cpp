// Acceptance battery: runs every verification suite at the default
// configuration (seed 1, rationals, default sample counts) and evaluates the
// release criteria, one pass/fail line per criterion.
//
// Criterion 10 is special: the general dual-ring homomorphism property is
// genuinely false (the map is an injective homomorphism only on the
// trace-zero subgroup), so the check named dualring.hom.general is REQUIRED
// to fail. It is reported as such, its salvage checks must pass, and it does
// not fail the gate; any other failing check anywhere does.

#include <excalg/suites.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace excalg;

namespace {

// The one check that is expected (and required) to fail.
const std::string kKnownImpossible = "dualring.hom.general";

struct Gate {
    std::map<std::string, Report> reports;
    bool all_ok = true;

    const Check* get(const std::string& suite, const std::string& name) const {
        auto it = reports.find(suite);
        if (it == reports.end()) return nullptr;
        return it->second.find(name);
    }

    // All checks in `suite` whose name starts with any of the prefixes.
    bool block_passes(const std::string& suite, const std::vector<std::string>& prefixes,
                      std::size_t& matched) const {
        auto it = reports.find(suite);
        if (it == reports.end()) return false;
        bool ok = true;
        for (const auto& c : it->second.checks)
            for (const auto& p : prefixes)
                if (c.name.rfind(p, 0) == 0) {
                    ++matched;
                    if (!c.pass && c.name != kKnownImpossible) ok = false;
                    break;
                }
        return ok && matched > 0;
    }

    void line(int id, const std::string& title, bool ok, const std::string& extra = "") {
        std::cout << "criterion " << id << ": " << title << " ... " << (ok ? "PASS" : "FAIL")
                  << (extra.empty() ? "" : " " + extra) << "\n";
        if (!ok) all_ok = false;
    }
};

} // namespace

int main() {
    RunConfig cfg; // field q, seed 1, default samples
    Workspace<Rat> W;
    Gate g;

    for (const auto& name : suite_names()) {
        auto t0 = std::chrono::steady_clock::now();
        Report r = run_suite(W, name, cfg);
        long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count());
        std::size_t unexpected = 0;
        for (const auto& c : r.checks)
            if (!c.pass && c.name != kKnownImpossible) {
                ++unexpected;
                std::cout << "  unexpected FAIL " << name << "/" << c.name << " "
                          << c.witness.dump() << "\n";
            }
        std::cout << "suite " << name << ": " << r.checks.size() << " checks, " << unexpected
                  << " unexpected failures, " << ms << " ms\n";
        g.reports.emplace(name, std::move(r));
    }
    std::cout << "\n";

    std::size_t m;

    m = 0;
    g.line(1, "tensor-construction dimension rows (21,52,78,133,248 / skew / A)",
           g.block_passes("allison", {"dims.tensor"}, m)
               && g.block_passes("structurable", {"dims.A.row", "dims.skew.row"}, m));

    m = 0;
    g.line(2, "3-graded dims (21,35,66,133; g0 9,17,36,79) and Freudenthal dims",
           g.block_passes("koecher", {"dims."}, m)
               && g.block_passes("allison", {"dims.freudenthal"}, m));

    m = 0;
    g.line(3, "Jacobi identity (exhaustive <= dim 78, 1e5 sampled triples at 133/248)",
           g.block_passes("koecher", {"jacobi."}, m) && g.block_passes("allison", {"jacobi."}, m));

    m = 0;
    g.line(4, "Killing form full rank + graded orthogonality, all 13 algebras",
           g.block_passes("koecher", {"killing."}, m)
               && g.block_passes("allison", {"killing."}, m));

    m = 0;
    g.line(5, "derivations of C: dim 14 perfect centerless; fixing K: dim 8",
           g.block_passes("dualpairs", {"der."}, m));

    m = 0;
    g.line(6, "dual-pair centralizers 14 / 8 / 14",
           g.block_passes("dualpairs", {"centralizer.", "embedding."}, m));

    m = 0;
    bool c7 = g.block_passes("composition", {"identity.", "negcontrol."}, m)
              && g.block_passes("jordan", {"identity.", "negcontrol."}, m)
              && g.block_passes("structurable", {"quartic.", "negcontrol."}, m);
    g.line(7, "identity suites + negative controls", c7,
           "(adjoint identity verified as (j#)# = N j and j o j# = N 1; the "
           "cross-product variant is demonstrated false by a negative control)");

    m = 0;
    g.line(8, "Weyl audit: |W|=48, 5 double cosets, minimal sigma representatives",
           g.block_passes("cosets", {""}, m));

    m = 0;
    g.line(9, "conjugation-identity registry, 11 cases x 100 seeds",
           g.block_passes("shalika", {"registry."}, m) && m == 11);

    {
        const Check* general = g.get("shalika", kKnownImpossible);
        bool salvage = true;
        for (const char* n : {"dualring.roundtrip", "dualring.injective",
                              "dualring.hom.tracezero", "dualring.tangent.11of12"}) {
            const Check* c = g.get("shalika", n);
            if (!c || !c->pass) salvage = false;
        }
        if (general && general->pass) {
            // Would contradict the analysis; surface it loudly.
            g.line(10, "dual-ring embedding", salvage,
                   "(unexpected: the general homomorphism check passed)");
        } else {
            g.line(10, "dual-ring embedding", general != nullptr && salvage,
                   "(general homomorphism FAILS AS DOCUMENTED with a recorded witness; "
                   "roundtrip, injectivity, trace-zero homomorphism and tangent 11-vs-12 "
                   "all pass)");
        }
    }

    {
        // Determinism: re-run three suites and compare byte-for-byte (timing
        // stripped); compare every structure dump against its golden file.
        bool det = true;
        for (const char* name : {"composition", "cosets", "shalika"}) {
            Report a = run_suite(W, name, cfg);
            Report b = run_suite(W, name, cfg);
            if (report_without_timing(a) != report_without_timing(b)) det = false;
        }
        bool golden = true;
        for (const auto& name : Workspace<Rat>::algebra_names()) {
            std::ifstream f(std::string(EXCALG_SOURCE_DIR) + "/goldens/" + name + ".jsonl",
                            std::ios::binary);
            if (!f) {
                golden = false;
                std::cout << "  missing golden for " << name << "\n";
                continue;
            }
            std::stringstream ss;
            ss << f.rdbuf();
            if (ss.str() != dump_structure(W.lie_by_name(name))) {
                golden = false;
                std::cout << "  golden mismatch for " << name << "\n";
            }
        }
        g.line(11, "determinism (repeat runs identical; dumps match goldens)", det && golden);
    }

    std::cout << "\n" << (g.all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return g.all_ok ? 0 : 1;
}
