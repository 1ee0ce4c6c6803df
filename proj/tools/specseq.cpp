#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "specseq/operations.hpp"
#include "specseq/serialization.hpp"
#include "specseq/verify.hpp"

using namespace specseq;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitWindow = 3;

int parse_r(const std::string& s) {
    if (s == "inf") return kInfRank;
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size() || v < 1) return -1;
        return v;
    } catch (...) {
        return -1;
    }
}

int thread_budget() {
    if (const char* env = std::getenv("SPECSEQ_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct PageCell {
    int p, q, dim, drank;
    bool known = false;
};

int cmd_universal(const std::string& rs, int s, int t, int cap, const std::string& out) {
    int r = parse_r(rs);
    if (r < 0 || s < 0 || t < s) {
        std::cerr << "universal: need r in {1,2,...,inf}, s >= 0, t >= s\n";
        return kExitUsage;
    }
    if (r == kInfRank && cap < 0) {
        std::cerr << "universal: the unbounded example needs an explicit --cap\n";
        return kExitUsage;
    }
    ComplexDoc doc;
    doc.cx = universal_example(r, s, t, cap);
    if (out.empty())
        std::cout << dump_complex(doc);
    else
        save_complex_file(doc, out);
    return 0;
}

int cmd_pages(const std::optional<ComplexDoc>& in, const std::vector<std::string>& univ,
              bool orbit, int wcap, int rmax, const std::vector<int>& window,
              const std::string& format) {
    Cosimplicial host;
    if (in) {
        host = in->cx;
    } else {
        int r = parse_r(univ[0]);
        int s = std::stoi(univ[1]), t = std::stoi(univ[2]);
        if (r < 0 || s < 0 || t < s) {
            std::cerr << "pages: invalid universal parameters\n";
            return kExitUsage;
        }
        host = universal_example(r, s, t, r == kInfRank ? 2 * s + 8 : -1);
    }
    Bicomplex bx;
    std::optional<OrbitConorm> oc;
    std::optional<Conormalization> cn;
    if (orbit) {
        oc = orbit_conorm(host, wcap);
        bx = oc->cx;
    } else {
        cn = conormalize(host);
        bx = cn->cx;
    }
    Window full = full_window(bx);
    int plo = full.plo, phi = full.phi;
    int qlo = 0, qhi = 0;
    {
        // derive the degree range from the populated blocks
        bool any = false;
        for (auto& [pq, b] : bx.basis)
            if (!b.empty()) {
                if (!any || pq.second < qlo) qlo = pq.second;
                if (!any || pq.second > qhi) qhi = pq.second;
                any = true;
            }
        if (!any) plo = 0, phi = -1;
    }
    if (window.size() == 4) {
        plo = window[0];
        phi = window[1];
        qlo = window[2];
        qhi = window[3];
    }
    json out;
    out["pages"] = json::array();
    if (plo > phi || qlo > qhi) {
        // empty window: empty table
    } else {
        Window w;
        w.plo = std::max(0, plo);
        w.phi = phi;
        w.nlo = qlo - phi;
        w.nhi = qhi - std::max(0, plo);
        FilteredComplex fc(bx, w);
        // warm the boundary cache so per-thread page objects share it safely
        for (int n = w.nlo - 1; n <= w.nhi + 1; ++n) {
            fc.boundary(n);
            fc.boundary(n + 1);
        }
        std::vector<std::pair<int, int>> cells;
        for (int p = std::max(0, plo); p <= phi; ++p)
            for (int q = qlo; q <= qhi; ++q) cells.emplace_back(p, q);
        std::vector<std::vector<PageCell>> grid(rmax + 1,
                                                std::vector<PageCell>(cells.size()));
        int nthreads = std::min<int>(thread_budget(), (int)cells.size() ? (int)cells.size() : 1);
        std::vector<std::thread> pool;
        std::vector<int> underflow(std::max(nthreads, 1), 0);
        auto work = [&](int tid) {
            SpectralSequence ss(fc);
            for (std::size_t i = tid; i < cells.size(); i += nthreads) {
                auto [p, q] = cells[i];
                for (int r = 1; r <= rmax; ++r) {
                    PageCell& cell = grid[r][i];
                    cell.p = p;
                    cell.q = q;
                    try {
                        cell.dim = (int)ss.entry(r, p, q).dim;
                        cell.drank = (int)rank(ss.differential(r, p, q));
                        cell.known = true;
                    } catch (const std::out_of_range&) {
                        underflow[tid] = 1;
                        return;
                    }
                }
            }
        };
        if (nthreads <= 1) {
            work(0);
        } else {
            for (int tn = 0; tn < nthreads; ++tn) pool.emplace_back(work, tn);
            for (auto& th : pool) th.join();
        }
        for (int u : underflow)
            if (u) {
                std::cerr << "pages: window too small for page " << rmax
                          << "; minimal valid window is columns [" << std::max(0, plo - rmax + 1)
                          << ", " << phi + rmax << "], degrees [" << qlo - rmax << ", "
                          << qhi + rmax << "]\n";
                return kExitWindow;
            }
        for (int r = 1; r <= rmax; ++r) {
            json page;
            page["r"] = r;
            page["entries"] = json::array();
            page["differentials"] = json::array();
            for (auto& cell : grid[r]) {
                if (!cell.known) continue;
                if (cell.dim) {
                    json e;
                    e["p"] = -cell.p;
                    e["q"] = cell.q;
                    e["dim"] = cell.dim;
                    page["entries"].push_back(e);
                }
                if (cell.drank) {
                    json e;
                    e["p"] = -cell.p;
                    e["q"] = cell.q;
                    e["rank"] = cell.drank;
                    page["differentials"].push_back(e);
                }
            }
            out["pages"].push_back(page);
        }
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "page,p,q,dim,drank\n";
        for (auto& page : out["pages"]) {
            int r = page["r"].get<int>();
            std::map<std::pair<int, int>, std::pair<int, int>> cells;
            for (auto& e : page["entries"])
                cells[{e["p"].get<int>(), e["q"].get<int>()}].first = e["dim"].get<int>();
            for (auto& e : page["differentials"])
                cells[{e["p"].get<int>(), e["q"].get<int>()}].second = e["rank"].get<int>();
            for (auto& [pq, v] : cells)
                std::cout << r << "," << pq.first << "," << pq.second << "," << v.first << ","
                          << v.second << "\n";
        }
    } else if (format == "ascii") {
        for (auto& page : out["pages"]) {
            int r = page["r"].get<int>();
            std::map<std::pair<int, int>, int> dims;
            for (auto& e : page["entries"])
                dims[{-e["p"].get<int>(), e["q"].get<int>()}] = e["dim"].get<int>();
            std::cout << "== page " << r << " ==\n";
            for (int q = qhi; q >= qlo; --q) {
                std::cout << (q < 10 ? " " : "") << q << " |";
                // columns are -p, increasing left to right
                for (int p = phi; p >= std::max(0, plo); --p) {
                    auto it = dims.find({p, q});
                    int d = it == dims.end() ? 0 : it->second;
                    if (d == 0)
                        std::cout << "   .";
                    else
                        std::cout << (d < 10 ? "   " : "  ") << d;
                }
                std::cout << "\n";
            }
            std::cout << "    ";
            for (int p = phi; p >= std::max(0, plo); --p)
                std::cout << (p < 3 ? "  -" : " -") << p;
            std::cout << "  (column = -p)\n";
        }
    } else {
        std::cerr << "pages: unknown format " << format << "\n";
        return kExitUsage;
    }
    return 0;
}

int cmd_eop(const ComplexDoc& doc, const std::string& cycle_path, int m,
            const std::string& kind, int wcap, bool internal) {
    std::ifstream cin_(cycle_path);
    if (!cin_) {
        std::cerr << "eop: cannot open cycle file " << cycle_path << "\n";
        return kExitUsage;
    }
    json cj = json::parse(cin_);
    RCycle y;
    y.r = parse_r(cj.at("r").is_string() ? cj.at("r").get<std::string>()
                                         : std::to_string(cj.at("r").get<int>()));
    y.s = cj.at("s").get<int>();
    y.t = cj.at("t").get<int>();
    if (y.r < 2 || y.s < 0 || y.t < y.s) {
        std::cerr << "eop: invalid cycle parameters\n";
        return kExitUsage;
    }
    const Cosimplicial& host = doc.cx;
    if (!host.monomial_above_zero()) {
        std::cerr << "eop: the host must be monomial above coface index zero\n";
        return kExitUsage;
    }
    HostPipeline hp(host);
    for (const json& comp : cj.at("components")) {
        int p = comp.at(0).get<int>(), i = comp.at(1).get<int>();
        int d = hp.cy.cx.dim(p, y.t + p - y.s);
        if (p < y.s || i < 0 || i >= d) {
            std::cerr << "eop: cycle component (" << p << "," << i << ") out of range\n";
            return kExitUsage;
        }
        auto it = y.comp.find(p);
        if (it == y.comp.end()) {
            y.comp[p] = F2Vec(d);
            it = y.comp.find(p);
        }
        it->second.flip(i);
    }
    try {
        validate_rcycle(y, hp.cy.cx);
    } catch (const std::exception& e) {
        std::cerr << "eop: " << e.what() << "\n";
        return kExitUsage;
    }
    OrbitPipeline oy(host, wcap);
    ExternalOpCtx ctx(host, hp.cy, oy, y);
    OpResult res;
    try {
        if (kind == "vertical")
            res = ctx.vertical(m);
        else if (kind == "horizontal")
            res = ctx.horizontal(m);
        else {
            std::cerr << "eop: kind must be vertical or horizontal\n";
            return kExitUsage;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "eop: " << e.what() << "\n";
        return kExitUsage;
    }
    json out;
    out["page"] = res.page;
    out["p"] = -res.s;
    out["q"] = res.t;
    out["zero"] = res.zero;
    json coords = json::array();
    for (auto i : res.coords.support()) coords.push_back((long long)i);
    out["coords"] = coords;
    if (internal) {
        if (!doc.structure_map) {
            std::cerr << "eop: --internal needs a structure_map in the complex file\n";
            return kExitUsage;
        }
        const json& sm = *doc.structure_map;
        int smw = sm.at("wcap").get<int>();
        if (smw != wcap) {
            std::cerr << "eop: structure_map wcap " << smw << " != --wcap " << wcap << "\n";
            return kExitUsage;
        }
        BicomplexMap theta;
        for (const json& t : sm.at("blocks")) {
            int p = t.at(0).get<int>(), q = t.at(1).get<int>();
            int row = t.at(2).get<int>(), col = t.at(3).get<int>();
            auto& blk = theta.blocks[{p, q}];
            if (!blk.rows() && !blk.cols())
                blk = F2Matrix(hp.cy.cx.dim(p, q), oy.oc.cx.dim(p, q));
            if (row < 0 || col < 0 || row >= (int)blk.rows() || col >= (int)blk.cols()) {
                std::cerr << "eop: structure_map entry out of range\n";
                return kExitUsage;
            }
            blk.set(row, col);
        }
        try {
            theta.validate(oy.oc.cx, hp.cy.cx);
        } catch (const std::exception& e) {
            std::cerr << "eop: structure_map is not a map of bicomplexes: " << e.what() << "\n";
            return kExitUsage;
        }
        int n = res.t - res.s;
        F2Vec v = assemble_map(theta, *oy.fc, *hp.fc, n).apply(res.rep);
        auto cc = hp.ss->class_coords(res.page, res.s, res.t, v);
        json internal_out;
        internal_out["zero"] = !cc || cc->is_zero();
        json ic = json::array();
        if (cc)
            for (auto i : cc->support()) ic.push_back((long long)i);
        internal_out["coords"] = ic;
        out["internal"] = internal_out;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, unsigned seed) {
    VerifyReport rep;
    try {
        rep = run_verify_suite(suite, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
    }
    json out;
    out["suite"] = rep.suite;
    out["cases"] = rep.cases;
    out["failures"] = json::array();
    for (auto& f : rep.failures) out["failures"].push_back(f);
    std::cout << out.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GF(2) spectral-sequence calculator for cosimplicial chain complexes"};
    app.require_subcommand(1);

    // universal
    auto* cu = app.add_subcommand("universal", "emit a universal example as a complex file");
    std::string u_r, u_out;
    int u_s = 0, u_t = 0, u_cap = -1;
    cu->add_option("r", u_r, "page parameter (integer >= 1, or 'inf')")->required();
    cu->add_option("s", u_s, "filtration column")->required();
    cu->add_option("t", u_t, "internal degree (>= s)")->required();
    cu->add_option("--cap", u_cap, "level cap (required for r = inf)");
    cu->add_option("--out", u_out, "output path (default stdout)");

    // pages
    auto* cp = app.add_subcommand("pages", "compute spectral-sequence pages");
    std::string p_in, p_format = "json";
    std::vector<std::string> p_univ;
    std::vector<int> p_window;
    bool p_orbit = false;
    int p_rmax = 2, p_wcap = 6;
    cp->add_option("--in", p_in, "complex file");
    cp->add_option("--universal", p_univ, "r s t triple instead of --in")->expected(3);
    cp->add_flag("--orbit", p_orbit, "apply the homotopy-orbit construction first");
    cp->add_option("--wcap", p_wcap, "weight cap for --orbit");
    cp->add_option("--rmax", p_rmax, "highest page to compute");
    cp->add_option("--window", p_window, "p_lo p_hi q_lo q_hi")->expected(4);
    cp->add_option("--format", p_format, "json|csv|ascii");

    // eop
    auto* ce = app.add_subcommand("eop", "evaluate external/internal operations");
    std::string e_in, e_cycle, e_kind = "vertical";
    int e_m = 0, e_wcap = 6;
    bool e_internal = false;
    ce->add_option("--in", e_in, "complex file")->required();
    ce->add_option("--cycle", e_cycle, "cycle file: {r,s,t,components:[[p,i],...]}")->required();
    ce->add_option("-m", e_m, "operation index")->required();
    ce->add_option("--kind", e_kind, "vertical|horizontal");
    ce->add_option("--wcap", e_wcap, "weight cap for the orbit complex");
    ce->add_flag("--internal", e_internal, "compose with the structure_map of the file");

    // verify
    auto* cv = app.add_subcommand("verify", "run a named verification suite");
    std::string v_suite;
    unsigned v_seed = 0;
    cv->add_option("suite", v_suite, "suite name or 'all'")->required();
    cv->add_option("--seed", v_seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cu->parsed()) return cmd_universal(u_r, u_s, u_t, u_cap, u_out);
        if (cp->parsed()) {
            if (p_in.empty() == p_univ.empty()) {
                std::cerr << "pages: give exactly one of --in / --universal\n";
                return kExitUsage;
            }
            std::optional<ComplexDoc> doc;
            if (!p_in.empty()) doc = load_complex_file(p_in);
            return cmd_pages(doc, p_univ, p_orbit, p_wcap, p_rmax, p_window, p_format);
        }
        if (ce->parsed()) return cmd_eop(load_complex_file(e_in), e_cycle, e_m, e_kind, e_wcap,
                                         e_internal);
        if (cv->parsed()) return cmd_verify(v_suite, v_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
