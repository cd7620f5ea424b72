#include "ffp/cli.hpp"

#include <future>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffp/accept.hpp"
#include "ffp/charsum.hpp"
#include "ffp/decomp.hpp"
#include "ffp/matrix.hpp"
#include "ffp/numth.hpp"
#include "ffp/potent.hpp"
#include "ffp/ring.hpp"

namespace ffp::cli {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& M) {
    json rows = json::array();
    for (unsigned i = 0; i < M.dim(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < M.dim(); ++j) row.push_back(M.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_codes(const Ring& R, unsigned n, const std::string& csv) {
    std::vector<std::int64_t> vals;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stoll(tok));
    if (vals.size() != static_cast<std::size_t>(n) * n)
        throw CLI::ValidationError("--matrix", "expected " + std::to_string(n * n) +
                                                   " comma-separated entries");
    Matrix A(R, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) A.at(i, j) = R.from_int(vals[i * n + j]);
    return A;
}

template <typename T, typename F>
auto ordered_parallel(const std::vector<T>& items, unsigned jobs, F fn)
    -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::vector<std::future<void>> futs;
    std::size_t chunk = (items.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        std::size_t lo = w * chunk, hi = std::min(items.size(), lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(items[i]);
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

int cmd_nq(std::uint64_t max, const std::string& format, unsigned jobs,
           std::ostream& out) {
    auto qs = odd_prime_powers_upto(max);
    auto recs = ordered_parallel(qs, jobs, [](std::uint64_t q) { return nq_record(q); });
    bool all_match = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : recs) {
            json row{{"q", r.q},
                     {"p", r.p},
                     {"r", r.r},
                     {"case", r.case_id},
                     {"closed_form", r.closed_form},
                     {"brute_force", r.brute_force},
                     {"match", r.match},
                     {"formula_variant", r.formula_variant}};
            if (r.has_s) row["s"] = r.s;
            arr.push_back(row);
            all_match = all_match && r.match;
        }
        out << arr.dump(2) << "\n";
    } else {
        out << "q,p,r,case,s,closed_form,brute_force,match\n";
        for (const auto& r : recs) {
            out << r.q << "," << r.p << "," << r.r << "," << r.case_id << ",";
            if (r.has_s) out << r.s;
            out << "," << r.closed_form << "," << r.brute_force << ","
                << (r.match ? "true" : "false") << "\n";
            all_match = all_match && r.match;
        }
    }
    return all_match ? 0 : 1;
}

int cmd_classify(std::uint64_t max, const std::string& format, unsigned jobs,
                 std::ostream& out) {
    auto qs = prime_powers_upto(max);
    struct Row {
        std::uint64_t q, n;
        bool all_mode, covers, has_witness;
        Elem witness;
    };
    auto per_q = ordered_parallel(qs, jobs, [](std::uint64_t q) {
        auto pr = prime_power(q);
        Ring F = Ring::field(pr->first, pr->second);
        std::vector<Row> rows;
        for (std::uint64_t n = 2; n <= q; ++n) {
            if ((q - 1) % (n - 1) != 0) continue;
            auto rec = covers_npotent_plus_tripotent(F, n);
            rows.push_back({q, n, false, rec.covers, rec.witness.has_value(),
                            rec.witness.value_or(0)});
        }
        if (q > 2) {
            auto rec = covers_potent_plus_tripotent(F);
            rows.push_back({q, 0, true, rec.covers, rec.witness.has_value(),
                            rec.witness.value_or(0)});
        }
        return rows;
    });
    bool consistent = true;
    auto expected = [](const Row& r) {
        if (r.all_mode) {
            static const std::uint64_t S[] = {3, 5, 7, 9, 13, 25, 29, 61, 81, 121, 169};
            for (auto s : S)
                if (r.q == s) return true;
            return false;
        }
        return r.n == r.q || (r.q == 3 && r.n == 2) || (r.q == 5 && r.n == 3) ||
               (r.q == 7 && r.n == 4) || (r.q == 9 && r.n == 5);
    };
    if (format == "json") {
        json arr = json::array();
        for (const auto& rows : per_q)
            for (const auto& r : rows) {
                json row{{"q", r.q},
                         {"mode", r.all_mode ? "potent" : "npotent"},
                         {"covers", r.covers},
                         {"expected", expected(r)}};
                if (!r.all_mode) row["n"] = r.n;
                if (r.has_witness) row["witness"] = r.witness;
                arr.push_back(row);
                consistent = consistent && r.covers == expected(r);
            }
        out << arr.dump(2) << "\n";
    } else {
        out << "q,n,mode,covers,witness,expected\n";
        for (const auto& rows : per_q)
            for (const auto& r : rows) {
                out << r.q << ",";
                if (!r.all_mode) out << r.n;
                out << "," << (r.all_mode ? "potent" : "npotent") << ","
                    << (r.covers ? "true" : "false") << ",";
                if (r.has_witness) out << r.witness;
                out << "," << (expected(r) ? "true" : "false") << "\n";
                consistent = consistent && r.covers == expected(r);
            }
    }
    return consistent ? 0 : 1;
}

const char* mode_name(DecompMode m) {
    switch (m) {
        case DecompMode::IdempotentPlusDpotent: return "idempotent+dpotent";
        case DecompMode::TripotentPlusQpotent: return "tripotent+qpotent";
        case DecompMode::InvolutionPlusQpotent: return "involution+qpotent";
        case DecompMode::TorsionClean: return "torsion-clean";
        case DecompMode::WeaklyTorsionClean: return "weakly-torsion-clean";
    }
    return "?";
}

json certificate_json(const Decomposition& d) {
    return json{{"E", matrix_to_json(d.E)},
                {"U", matrix_to_json(d.U)},
                {"sign", d.sign},
                {"mode", mode_name(d.mode)},
                {"exponent", d.exponent},
                {"unit", d.unit},
                {"verified", d.verified}};
}

int cmd_decompose(const std::string& field, unsigned n, const std::string& codes,
                  bool involution, std::ostream& out) {
    Ring F = parse_field(field);
    Matrix A = matrix_from_codes(F, n, codes);
    Decomposition d = involution ? decompose_involution_plus_invertible_dpotent(A)
                                 : decompose_idempotent_plus_invertible_dpotent(A);
    json cert = certificate_json(d);
    cert["field"] = F.name();
    cert["n"] = n;
    out << cert.dump(2) << "\n";
    return d.verified ? 0 : 1;
}

int cmd_counterexample(const std::string& which, const std::string& format,
                       std::ostream& out) {
    json arr = json::array();
    bool all_negative = true;
    auto run_one = [&](const std::string& tag) {
        Ring F = tag == "f3" ? Ring::field(3, 1) : Ring::field(5, 1);
        Matrix A = counterexample_matrix(F);
        auto cert = verify_no_tripotent_pm_idempotent(A);
        all_negative = all_negative && !cert.found;
        json row{{"which", tag},
                 {"field", F.name()},
                 {"outcome", cert.found ? "found" : "exhausted-none"},
                 {"search_space_size", cert.search_space_size}};
        if (tag == "f3")
            row["negated_min_poly"] = minimal_polynomial(-A).str();
        arr.push_back(row);
        if (format != "json") {
            out << tag << ": " << (cert.found ? "found" : "exhausted-none")
                << " over " << cert.search_space_size << " candidates ("
                << cert.search_space_size / 2 << " idempotents x 2 signs)\n";
            if (tag == "f3")
                out << tag << ": negated matrix has minimal polynomial "
                    << minimal_polynomial(-A).str() << "\n";
        }
    };
    if (which == "f3" || which == "both") run_one("f3");
    if (which == "f5" || which == "both") run_one("f5");
    if (format == "json") out << arr.dump(2) << "\n";
    return all_negative ? 0 : 1;
}

int cmd_zp2(std::uint64_t p, std::uint64_t q, const std::string& codes,
            const std::string& format, std::ostream& out) {
    if (codes.empty()) {
        bool consistent = true;
        json arr = json::array();
        for (std::uint64_t qq = 2; qq <= p * (p - 1) + 1; ++qq) {
            bool covered = zp2_element_coverage(p, qq);
            bool expected = (qq - 1) % (p * (p - 1)) == 0;
            consistent = consistent && covered == expected;
            if (format == "json")
                arr.push_back(json{{"p", p}, {"q", qq}, {"covered", covered},
                                   {"expected", expected}});
        }
        if (format == "json") {
            out << arr.dump(2) << "\n";
        } else {
            out << "p,q,covered,expected\n";
            for (std::uint64_t qq = 2; qq <= p * (p - 1) + 1; ++qq) {
                bool covered = zp2_element_coverage(p, qq);
                bool expected = (qq - 1) % (p * (p - 1)) == 0;
                out << p << "," << qq << "," << (covered ? "true" : "false") << ","
                    << (expected ? "true" : "false") << "\n";
            }
        }
        return consistent ? 0 : 1;
    }
    Ring R = Ring::zmod(p * p);
    Matrix A = matrix_from_codes(R, 2, codes);
    auto d = zp2_matrix2_decompose(A, p, q);
    json cert = certificate_json(d);
    cert["ring"] = R.name();
    cert["q"] = q;
    out << cert.dump(2) << "\n";
    return d.verified ? 0 : 1;
}

int cmd_torsion(const std::string& field, std::uint64_t n_opt,
                const std::string& format, std::ostream& out) {
    Ring F = parse_field(field);
    std::uint64_t weak = minimal_weakly_torsion_clean_n(F);
    std::uint64_t plain = minimal_torsion_clean_n(F);
    json row{{"field", F.name()},
             {"minimal_weakly_torsion_clean", weak},
             {"minimal_torsion_clean", plain}};
    if (n_opt > 0) {
        auto covW = element_weakly_torsion_clean(F, n_opt);
        auto covP = element_torsion_clean(F, n_opt);
        row["n"] = n_opt;
        row["weakly_covered"] = covW.all_covered;
        row["covered"] = covP.all_covered;
        if (covW.witness) row["weakly_witness"] = *covW.witness;
        if (covP.witness) row["witness"] = *covP.witness;
    }
    if (format == "json") {
        out << row.dump(2) << "\n";
    } else {
        out << "field,weakly,plain\n"
            << F.name() << "," << weak << "," << plain << "\n";
        if (n_opt > 0) {
            auto covW = element_weakly_torsion_clean(F, n_opt);
            out << "n=" << n_opt << " weakly_covered="
                << (covW.all_covered ? "true" : "false");
            if (covW.witness) out << " witness=" << *covW.witness;
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sweeps, decompositions, and verification for potent-sum structure "
                 "of finite fields and matrix rings"};
    app.require_subcommand(1);

    std::uint64_t max = 300;
    std::string field = "5^1";
    unsigned n = 2;
    std::string matrix_codes;
    std::string format = "csv";
    unsigned jobs = 1;
    std::uint64_t guard = 1ull << 32;
    std::string which = "both";
    std::uint64_t p = 3, qexp = 7;
    std::uint64_t torsion_n = 0;
    bool involution = false;

    auto* nq = app.add_subcommand("nq", "closed-form vs brute-force triple counts");
    nq->add_option("--max", max, "largest field size");
    nq->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    nq->add_option("--jobs", jobs);

    auto* classify = app.add_subcommand("classify", "potent + tripotent coverage tables");
    classify->add_option("--max", max, "largest field size");
    classify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    classify->add_option("--jobs", jobs);

    auto* decompose = app.add_subcommand("decompose",
                                         "idempotent + invertible d-potent certificate");
    decompose->add_option("--field", field, "field as p or p^r")->required();
    decompose->add_option("--n", n, "matrix dimension")->required();
    decompose->add_option("--matrix", matrix_codes, "row-major comma-separated entries")
        ->required();
    decompose->add_flag("--involution", involution,
                        "produce an involution + invertible d-potent certificate");

    auto* counter = app.add_subcommand("counterexample",
                                       "replay the 3x3 negative certificates");
    counter->add_option("--which", which)->check(CLI::IsMember({"f3", "f5", "both"}));
    counter->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* zp2 = app.add_subcommand("zp2", "idempotent + q-potent structure over Z/p^2");
    zp2->add_option("--p", p, "odd prime")->required();
    zp2->add_option("--q", qexp, "potency exponent");
    zp2->add_option("--matrix", matrix_codes, "2x2 row-major entries to decompose");
    zp2->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* torsion = app.add_subcommand("torsion", "minimal torsion-clean exponents");
    torsion->add_option("--field", field)->required();
    torsion->add_option("--n", torsion_n, "also test this torsion exponent");
    torsion->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "full verification suite");
    verify->add_option("--jobs", jobs);

    (void)guard;
    app.add_option("--guard", guard, "search-space guard override");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (nq->parsed()) return cmd_nq(max, format, jobs, out);
        if (classify->parsed()) return cmd_classify(max, format, jobs, out);
        if (decompose->parsed()) return cmd_decompose(field, n, matrix_codes, involution, out);
        if (counter->parsed()) return cmd_counterexample(which, format, out);
        if (zp2->parsed()) return cmd_zp2(p, qexp, matrix_codes, format, out);
        if (torsion->parsed()) return cmd_torsion(field, torsion_n, format, out);
        if (verify->parsed())
            return accept::print_results(accept::run_all(jobs), out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace ffp::cli
