#pragma once

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <permbound/tabulator.hpp>

namespace permbound::cli {

namespace detail {

// PERMBOUND_BUDGET overrides the built-in default for every enumeration
// budget flag; an explicit flag still wins over the environment.
inline std::uint64_t budget_default(std::uint64_t fallback) {
    const char* s = std::getenv("PERMBOUND_BUDGET");
    if (!s || !*s) return fallback;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != std::strlen(s)) throw std::invalid_argument("trailing characters");
        return v;
    } catch (...) {
        throw std::domain_error("PERMBOUND_BUDGET: expected a non-negative integer, got \"" + std::string(s) + "\"");
    }
}

// Every formula bound whose premises hold at (n, d), lower bounds first.
inline std::vector<BoundRecord> applicable_bounds(int n, int d, std::uint64_t pp_budget) {
    std::vector<BoundRecord> lows, ups;
    lows.push_back(gv_lower(n, d));
    if (auto g = graph_lower(n, d); g.method == "sphere-graph") lows.push_back(std::move(g));
    lows.push_back(ball_intersect_lower(n, d));
    for (auto& r : elementary(n, d))
        (r.sense == BoundRecord::Sense::lower ? lows : ups).push_back(std::move(r));
    if (n >= 3 && d == n - 1) lows.push_back(klove_lower(n));
    if (prime_power(static_cast<unsigned long>(n))) {
        const auto q = static_cast<unsigned long>(n);
        const int dd = n - d;
        if (d == n - 1) {
            Count v = Count(q) * (q - 1);
            lows.push_back({n, d, BoundRecord::Sense::lower, v, "affine-exact"});
            ups.push_back({n, d, BoundRecord::Sense::upper, v, "affine-exact"});
        }
        if (1 <= dd && dd <= 5 && d >= 2) lows.push_back(pp_sum_lower(q, dd, pp_budget));
        if (1 <= dd && dd <= 4 && d >= 2) lows.push_back(pp_monic_lower(q, dd, pp_budget));
        if (dd == 2 && q >= 4 && q % 3 != 1) lows.push_back(pp_square_lower(q));
    }
    if (n >= 4 && d == n - 2 && prime_power(static_cast<unsigned long>(n - 1))) {
        Count v = Count(n) * (n - 1) * (n - 2);
        lows.push_back({n, d, BoundRecord::Sense::lower, v, "pgl-exact"});
        ups.push_back({n, d, BoundRecord::Sense::upper, v, "pgl-exact"});
    }
    if ((n == 11 || n == 12) && d == 8) {
        Count v = n == 11 ? 7920 : 95040;
        lows.push_back({n, d, BoundRecord::Sense::lower, v, "mathieu-exact"});
        ups.push_back({n, d, BoundRecord::Sense::upper, v, "mathieu-exact"});
    }
    ups.push_back(tarnanen_upper(n, d));
    lows.insert(lows.end(), std::make_move_iterator(ups.begin()), std::make_move_iterator(ups.end()));
    return lows;
}

inline void write_witness(const Witness& w, const std::string& path, std::ostream& out) {
    out << "construction: " << w.construction << "\n";
    out << "claim: (" << w.claim.n << ", " << w.claim.m.get_str() << ", " << w.claim.d << ")\n";
    out << "verified: " << to_string(w.verification.mode);
    if (w.verification.mode == VerifyMode::sampled)
        out << " pairs=" << w.verification.pairs << " seed=" << w.verification.seed;
    out << "\n";
    if (path.empty()) return;

    std::ofstream pa_file(path);
    if (!pa_file) throw std::runtime_error("cannot write " + path);
    write_pa(pa_file, w.pa);

    nlohmann::json j{{"construction", w.construction},
                     {"n", w.claim.n},
                     {"m", static_cast<std::uint64_t>(w.pa.size())},
                     {"d", w.claim.d},
                     {"verification",
                      {{"mode", to_string(w.verification.mode)},
                       {"seed", w.verification.seed},
                       {"pairs", w.verification.pairs}}}};
    std::ofstream side(path + ".json");
    if (!side) throw std::runtime_error("cannot write " + path + ".json");
    side << j.dump(2) << "\n";

    out << "array: " << path << "\n";
    out << "provenance: " << path << ".json\n";
}

inline PermutationArray read_pa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    return read_pa(in);
}

} // namespace detail

// Parses args (program name excluded) and executes one verb, writing results
// to out and diagnostics to err. Returns 0 on success, 1 on domain or
// verification errors, 2 when an enumeration budget or size cap is exceeded.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact bounds and verified constructions for permutation arrays"};
    app.require_subcommand(1);
    int rc = 0;

    try {
        const std::uint64_t enum_budget = detail::budget_default(100'000'000ULL);

        // bound --n N --d D
        auto* bound = app.add_subcommand("bound", "list every applicable bound at (n, d)");
        auto bound_args = std::make_shared<std::pair<int, int>>();
        bound->add_option("--n", bound_args->first, "permutation length")->required();
        bound->add_option("--d", bound_args->second, "minimum Hamming distance")->required();
        bound->callback([&, bound_args] {
            for (const auto& r : detail::applicable_bounds(bound_args->first, bound_args->second, enum_budget))
                out << serialize(r) << "\n";
        });

        // table --n-max N [--format ...] [--out FILE] [witness flags]
        auto* table = app.add_subcommand("table", "build the bound table and export it");
        struct TableArgs {
            int n_max = 0;
            std::string format = "csv";
            std::string out_path;
            TableOptions opt;
        };
        auto targs = std::make_shared<TableArgs>();
        targs->opt.pp_budget = enum_budget;
        targs->opt.clique_budget = detail::budget_default(200'000ULL);
        table->add_option("--n-max", targs->n_max, "largest permutation length")->required();
        table->add_option("--format", targs->format, "csv or markdown")
            ->check(CLI::IsMember({"csv", "markdown"}));
        table->add_option("--out", targs->out_path, "write the table to this file");
        table->add_flag("--greedy", targs->opt.enable_greedy, "seed greedy witnesses");
        table->add_flag("--clique", targs->opt.enable_clique, "seed clique-search witnesses");
        table->add_flag("--anchor", targs->opt.enable_anchor, "anchored covering over greedy witnesses");
        table->add_flag("--mathieu-closure", targs->opt.enable_mathieu_closure,
                        "back the sporadic cells with generated closures");
        table->add_option("--greedy-limit", targs->opt.greedy_limit, "largest n the greedy scan enumerates");
        table->add_option("--clique-budget", targs->opt.clique_budget, "search-tree node budget per cell");
        table->add_option("--pp-budget", targs->opt.pp_budget, "polynomial enumeration budget");
        table->callback([&, targs] {
            BoundTable t = build_table(targs->n_max, targs->opt);
            std::string text =
                export_table(t, targs->format == "csv" ? TableFormat::csv : TableFormat::markdown);
            if (targs->out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(targs->out_path);
                if (!f) throw std::runtime_error("cannot write " + targs->out_path);
                f << text;
            }
        });

        // construct <which> ... [--out FILE]
        auto* construct = app.add_subcommand("construct", "build and verify a permutation array");
        construct->require_subcommand(1);
        struct ConstructArgs {
            unsigned long q = 0;
            int n = 0, d = 0, count = -1, threads = 1;
            int limit = 10;
            std::uint64_t seed = 0, budget = 0;
            std::string order = "lex", in_path, out_path;
        };
        auto cargs = std::make_shared<ConstructArgs>();
        cargs->budget = enum_budget;
        auto emit = [&, cargs](const Witness& w) { detail::write_witness(w, cargs->out_path, out); };

        auto* c_affine = construct->add_subcommand("affine", "maps x to ux+v over GF(q)");
        c_affine->add_option("--q", cargs->q, "field order")->required();
        c_affine->add_option("--out", cargs->out_path, "write the array here");
        c_affine->callback([=] { emit(affine_pa(cargs->q)); });

        auto* c_mols = construct->add_subcommand("mols", "rows of mutually orthogonal latin squares");
        c_mols->add_option("--q", cargs->q, "square order (prime power)")->required();
        c_mols->add_option("--count", cargs->count, "number of squares, default q-1");
        c_mols->add_option("--out", cargs->out_path, "write the array here");
        c_mols->callback([=] {
            int m = cargs->count < 0 ? static_cast<int>(cargs->q) - 1 : cargs->count;
            emit(pa_from_mols(standard_mols(cargs->q, m)));
        });

        auto* c_pgl = construct->add_subcommand("pgl2", "fractional linear maps on GF(q) plus infinity");
        c_pgl->add_option("--q", cargs->q, "field order")->required();
        c_pgl->add_option("--out", cargs->out_path, "write the array here");
        c_pgl->callback([=] { emit(pgl2_pa(cargs->q)); });

        auto* c_mathieu = construct->add_subcommand("mathieu", "closure of the standard generators");
        c_mathieu->add_option("--n", cargs->n, "11 or 12")->required();
        c_mathieu->add_option("--out", cargs->out_path, "write the array here");
        c_mathieu->callback([=] { emit(mathieu_pa(cargs->n)); });

        auto add_puncture_flags = [&](CLI::App* c) {
            c->add_option("--in", cargs->in_path, "input array file, default the Mathieu-12 closure");
            c->add_option("--d", cargs->d, "claimed distance of the input file (required with --in)");
            c->add_option("--seed", cargs->seed, "seed for sampled verification");
            c->add_option("--threads", cargs->threads, "parallelism cap for full verification");
            c->add_option("--out", cargs->out_path, "write the array here");
        };
        auto puncture_input = [cargs]() -> Witness {
            if (cargs->in_path.empty()) return mathieu_pa(12);
            if (cargs->d <= 0) throw std::domain_error("--in needs --d, the input's claimed distance");
            PermutationArray pa = detail::read_pa_file(cargs->in_path);
            Claim claim{pa.n(), Count(static_cast<unsigned long>(pa.size())), cargs->d};
            return {std::move(pa), claim, "file(" + cargs->in_path + ",d=" + std::to_string(cargs->d) + ")",
                    {VerifyMode::full}};
        };
        auto* c_l15 = construct->add_subcommand("lemma15", "distance-3 reduction dropping the top symbol");
        add_puncture_flags(c_l15);
        c_l15->callback([=] { emit(puncture_d3(puncture_input(), cargs->seed, cargs->threads)); });
        auto* c_l16 = construct->add_subcommand("lemma16", "distance-2 reduction keeping two buckets");
        add_puncture_flags(c_l16);
        c_l16->callback([=] { emit(puncture_d2(puncture_input(), cargs->seed, cargs->threads)); });

        auto* c_greedy = construct->add_subcommand("greedy", "greedy sphere-covering scan of S_n");
        c_greedy->add_option("--n", cargs->n, "permutation length")->required();
        c_greedy->add_option("--d", cargs->d, "minimum distance")->required();
        c_greedy->add_option("--order", cargs->order, "lex or shuffled")
            ->check(CLI::IsMember({"lex", "shuffled"}));
        c_greedy->add_option("--seed", cargs->seed, "shuffle seed");
        c_greedy->add_option("--limit", cargs->limit, "largest n the scan enumerates");
        c_greedy->add_option("--out", cargs->out_path, "write the array here");
        c_greedy->callback([=] {
            auto order = cargs->order == "lex" ? GreedyOrder::lex : GreedyOrder::shuffled;
            emit(greedy_gv(cargs->n, cargs->d, order, cargs->seed, cargs->limit));
        });

        auto* c_clique = construct->add_subcommand("clique", "branch-and-bound clique search");
        c_clique->add_option("--n", cargs->n, "permutation length")->required();
        c_clique->add_option("--d", cargs->d, "minimum distance")->required();
        c_clique->add_option("--budget", cargs->budget, "search-tree node budget");
        c_clique->add_option("--out", cargs->out_path, "write the array here");
        c_clique->callback([=] { emit(clique_lower(cargs->n, cargs->d, cargs->budget)); });

        // verify FILE --d D
        auto* verify = app.add_subcommand("verify", "check an array file's minimum distance");
        struct VerifyArgs {
            std::string path;
            int d = 0, threads = 1;
            std::uint64_t sampled = 0, seed = 0;
        };
        auto vargs = std::make_shared<VerifyArgs>();
        verify->add_option("file", vargs->path, "array file")->required();
        verify->add_option("--d", vargs->d, "distance to check")->required();
        verify->add_option("--threads", vargs->threads, "parallelism cap");
        verify->add_option("--sampled", vargs->sampled, "check this many random pairs instead of all");
        verify->add_option("--seed", vargs->seed, "sampling seed");
        verify->callback([&, vargs] {
            PermutationArray pa = detail::read_pa_file(vargs->path);
            if (vargs->sampled > 0) {
                try {
                    permbound::detail::verify_sampled(pa, vargs->d, vargs->seed, vargs->sampled, "verify");
                    out << "min distance " << vargs->d << ": OK (sampled pairs=" << vargs->sampled
                        << " seed=" << vargs->seed << ")\n";
                } catch (const std::runtime_error&) {
                    out << "min distance " << vargs->d << ": FAIL (sampled pair below)\n";
                    rc = 1;
                }
                return;
            }
            auto md = min_distance(pa, vargs->threads);
            if (!md || *md >= vargs->d) {
                out << "min distance " << vargs->d << ": OK\n";
            } else {
                out << "min distance " << vargs->d << ": FAIL (found " << *md << ")\n";
                rc = 1;
            }
        });

        // pp-count --q Q --max-deg K [--monic]
        auto* ppc = app.add_subcommand("pp-count", "count permutation polynomials by degree");
        struct PpArgs {
            unsigned long q = 0;
            int max_deg = 0;
            bool monic = false;
            std::uint64_t budget;
        };
        auto pargs = std::make_shared<PpArgs>();
        pargs->budget = enum_budget;
        ppc->add_option("--q", pargs->q, "field order")->required();
        ppc->add_option("--max-deg", pargs->max_deg, "largest degree, at most 5")->required();
        ppc->add_flag("--monic", pargs->monic, "monic polynomials only");
        ppc->add_option("--budget", pargs->budget, "enumeration budget");
        ppc->callback([&, pargs] {
            auto counts =
                count_pps_by_degree(Field::make(pargs->q), pargs->max_deg, pargs->monic, pargs->budget);
            Count total = 0;
            for (const auto& [deg, c] : counts) {
                out << "degree " << deg << ": " << c.get_str() << "\n";
                total += c;
            }
            out << "total: " << total.get_str() << "\n";
        });

        // sphere-stats --n N --d D
        auto* stats = app.add_subcommand("sphere-stats", "sphere graph sizes at (n, d)");
        auto sargs = std::make_shared<std::pair<int, int>>();
        stats->add_option("--n", sargs->first, "permutation length")->required();
        stats->add_option("--d", sargs->second, "distance parameter")->required();
        stats->callback([&, sargs] {
            SphereGraphStats s = sphere_graph_stats(sargs->first, sargs->second);
            out << "vertices: " << s.vertices.get_str() << "\n";
            out << "edges: " << s.edges.get_str() << "\n";
            out << "binary vertices: " << s.binary_vertices.get_str() << "\n";
            out << "binary edges: " << s.binary_edges.get_str() << "\n";
        });

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return rc;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace permbound::cli
