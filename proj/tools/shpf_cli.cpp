#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shpf/cache.hpp"
#include "shpf/serialize.hpp"
#include "shpf/verify.hpp"

namespace {

using namespace shpf;

struct Common {
    std::string format = "text";
    std::string out;
    std::string cache_dir;
    bool no_cache = false;
    int jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", c.out, "write output to this file instead of stdout");
    cmd->add_option("--cache-dir", c.cache_dir,
                    "cache directory (default $SHPF_CACHE_DIR, else ~/.cache/shpf)");
    cmd->add_flag("--no-cache", c.no_cache, "recompute instead of reading or writing the cache");
    cmd->add_option("--jobs", c.jobs, "worker cap; output is order-stable regardless")
        ->check(CLI::PositiveNumber);
}

std::filesystem::path cache_dir_of(const Common& c) {
    return c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir);
}

int emit(const Common& c, const std::string& body) {
    if (c.out.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(c.out);
    if (!f) {
        std::cerr << "error: cannot open " << c.out << " for writing\n";
        return 1;
    }
    f << body;
    return 0;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

std::string sign_symbols(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += xs[i] > 0 ? '+' : xs[i] < 0 ? '-' : '0';
    }
    return out;
}

// ---- expand -------------------------------------------------------------

Json compute_expand(int n, const std::string& target, const std::string& basis) {
    if (target == "sh_t") {
        auto [naive, odd] = t_graded(n);
        if (!(naive == odd))
            throw std::logic_error("graded sums from naive and odd enumerations disagree");
        return tsymfunc_to_json(naive);
    }
    if (basis == "p")
        return symfunc_to_json(target == "pf" ? pf_symfunc(n) : sh_symfunc(n));
    if (basis == "v-odd") return expansion_to_json(n, "v-odd", expand_odd_v(sh_symfunc(n)));
    return expansion_to_json(n, "v-naive", naive_v_expansion(n));
}

std::string render_expand(const Json& payload, const Common& c, const std::string& target,
                          const std::string& basis) {
    if (c.format == "json") return payload.dump(2) + "\n";
    if (target == "sh_t") {
        TSymFunc f = tsymfunc_from_json(payload);
        if (c.format == "text") return f.to_string() + "\n";
        std::string out = "partition,poly\n";
        for (const auto& [lam, poly] : f.terms())
            out += csv_quote(lam.to_string()) + "," + csv_quote(poly.to_string()) + "\n";
        return out;
    }
    if (basis == "p") {
        SymFunc f = symfunc_from_json(payload);
        if (c.format == "text") return f.to_string() + "\n";
        std::string out = "partition,coeff\n";
        for (const auto& [lam, coeff] : f.terms())
            out += csv_quote(lam.to_string()) + "," + to_string(coeff) + "\n";
        return out;
    }
    auto coeffs = expansion_from_json(payload);
    if (c.format == "text") {
        std::string out;
        for (const auto& [lam, coeff] : coeffs)
            out += (out.empty() ? "" : " + ") + to_string(coeff) + "*V" + lam.to_string();
        return (out.empty() ? "0" : out) + "\n";
    }
    std::string out = "partition,coeff\n";
    for (const auto& [lam, coeff] : coeffs)
        out += csv_quote(lam.to_string()) + "," + to_string(coeff) + "\n";
    return out;
}

int run_expand(const Common& c, int n, const std::string& target, const std::string& basis) {
    if (target == "pf" && basis != "p")
        return usage_error("target pf only has a p-basis expansion");
    if (target == "sh_t" && basis != "p")
        return usage_error("target sh_t only has a p-basis expansion");
    const int cap = target == "sh_t" ? 9 : 12;
    if (n > cap)
        return usage_error("expand --target " + target + " is bounded by n <= " +
                           std::to_string(cap));

    const std::string key = cache_key("expand-" + target + "-" + basis, n);
    Json payload;
    bool have = false;
    if (!c.no_cache)
        if (auto hit = cache_load(cache_dir_of(c), key)) {
            payload = std::move(*hit);
            have = true;
        }
    if (!have) {
        payload = compute_expand(n, target, basis);
        if (!c.no_cache) cache_store(cache_dir_of(c), key, payload);
    }
    return emit(c, render_expand(payload, c, target, basis));
}

// ---- count --------------------------------------------------------------

struct CountRow {
    Integer actual = 0;
    Integer expected = 0;
    std::string rule;
};

int count_cap(const std::string& what) {
    if (what == "pf" || what == "naive") return 8;
    if (what == "sorted-pf") return 12;
    return 9;
}

CountRow compute_count(int n, const std::string& what) {
    CountRow row;
    if (what == "pf" || what == "naive") {
        Integer pf = 0;
        for_each_pf(n, [&](const std::vector<int>&) { ++pf; });
        if (what == "pf") {
            row = {pf, pow_int(n + 1, n - 1), "(n+1)^(n-1)"};
        } else {
            row = {pf * pow2(n), pow2(n) * pow_int(n + 1, n - 1), "2^n (n+1)^(n-1)"};
        }
    } else if (what == "sorted-pf") {
        Integer c = 0;
        for_each_sorted_pf(n, [&](const std::vector<int>&) { ++c; });
        row = {c, catalan(n), "catalan(n)"};
    } else if (what == "sorted-naive") {
        Integer c = 0;
        for_each_sorted_naive(n, [&](const SortedNaiveShifted&) { ++c; });
        row = {c, schroeder(n), "schroeder(n)"};
    } else if (what == "garages") {
        Integer c = 0, byword = 0;
        for_each_sorted_naive(n, [&](const SortedNaiveShifted& x) {
            if (is_garage(x)) ++c;
            if (is_garage_by_word(x)) ++byword;
        });
        row = {c, byword, "independent word-criterion count"};
    } else if (what == "sorted-odd") {
        Integer c = 0;
        for_each_sorted_odd(n, [&](const SortedOddShifted&) { ++c; });
        row = {c, schroeder(n), "schroeder(n)"};
    } else { // schroeder-paths
        Integer c = 0;
        for_each_schroeder_path(n, [&](const std::string& steps) {
            if (is_schroeder_path(steps, n)) ++c;
        });
        row = {c, schroeder(n), "schroeder(n)"};
    }
    return row;
}

int run_count(const Common& c, int n, const std::string& what) {
    if (n > count_cap(what))
        return usage_error("count --what " + what + " is bounded by n <= " +
                           std::to_string(count_cap(what)));
    CountRow row = compute_count(n, what);
    const bool pass = row.actual == row.expected;
    std::string body;
    if (c.format == "json") {
        Json j{{"what", what},
               {"n", n},
               {"actual", row.actual.get_str()},
               {"expected", row.expected.get_str()},
               {"rule", row.rule},
               {"pass", pass}};
        body = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        body = "what,n,actual,expected,rule,status\n" + what + "," + std::to_string(n) + "," +
               row.actual.get_str() + "," + row.expected.get_str() + "," + csv_quote(row.rule) +
               "," + (pass ? "PASS" : "FAIL") + "\n";
    } else {
        body = what + " n=" + std::to_string(n) + ": " + row.actual.get_str() + ", expected " +
               row.expected.get_str() + " [" + row.rule + "] " + (pass ? "PASS" : "FAIL") + "\n";
    }
    int rc = emit(c, body);
    return rc != 0 ? rc : pass ? 0 : 1;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const Common& c, const std::string& suite, int max_n, int brute_bound) {
    std::vector<CheckResult> results;
    if (suite == "identities" || suite == "all") {
        auto part = verify_identities(max_n);
        results.insert(results.end(), part.begin(), part.end());
    }
    if (suite == "combinatorics" || suite == "all") {
        auto part = verify_combinatorics(max_n);
        results.insert(results.end(), part.begin(), part.end());
    }
    if (suite == "characters" || suite == "all") {
        auto part = verify_characters(max_n, brute_bound);
        results.insert(results.end(), part.begin(), part.end());
    }
    if (suite == "clifford" || suite == "all") {
        auto part = verify_clifford(max_n);
        results.insert(results.end(), part.begin(), part.end());
    }

    int failures = 0;
    for (const auto& r : results) failures += r.pass ? 0 : 1;

    std::string body;
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"suite", r.suite},
                           {"claim", r.claim},
                           {"n", r.n},
                           {"pass", r.pass},
                           {"detail", r.detail}});
        body = arr.dump(2) + "\n";
    } else if (c.format == "csv") {
        body = "suite,claim,n,status,detail\n";
        for (const auto& r : results)
            body += r.suite + "," + csv_quote(r.claim) + "," + std::to_string(r.n) + "," +
                    (r.pass ? "PASS" : "FAIL") + "," + csv_quote(r.detail) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.pass ? "PASS" : "FAIL") << " [" << r.suite << "] " << r.claim
               << " (n=" << r.n << ")";
            if (!r.pass && !r.detail.empty()) os << ": " << r.detail;
            os << "\n";
        }
        os << results.size() << " checks, " << failures << " failures\n";
        body = os.str();
    }
    int rc = emit(c, body);
    return rc != 0 ? rc : failures == 0 ? 0 : 1;
}

// ---- enumerate ------------------------------------------------------------

int run_enumerate(const Common& c, int n, const std::string& what) {
    if (n > count_cap(what))
        return usage_error("enumerate --what " + what + " is bounded by n <= " +
                           std::to_string(count_cap(what)));

    Json arr = Json::array();
    std::string text, csv;
    auto add = [&](const Json& j, const std::string& line, const std::string& row) {
        if (c.format == "json") arr.push_back(j);
        else if (c.format == "csv") csv += row + "\n";
        else text += line + "\n";
    };

    if (what == "pf" || what == "sorted-pf") {
        csv = "p\n";
        auto visit = [&](const std::vector<int>& p) {
            add(Json(p), join_ints(p), csv_quote(join_ints(p)));
        };
        if (what == "pf") for_each_pf(n, visit);
        else for_each_sorted_pf(n, visit);
    } else if (what == "naive") {
        csv = "p,sigma\n";
        for_each_pf(n, [&](const std::vector<int>& p) {
            for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
                std::vector<int> sigma(n, 1);
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) sigma[i] = -1;
                add(Json{{"p", p}, {"sigma", sigma}},
                    "p: " + join_ints(p) + " | sigma: " + sign_symbols(sigma),
                    csv_quote(join_ints(p)) + "," + csv_quote(sign_symbols(sigma)));
            }
        });
    } else if (what == "sorted-naive" || what == "garages") {
        csv = "p,sbar\n";
        auto visit = [&](const SortedNaiveShifted& x) {
            add(naive_to_json(x), "p: " + join_ints(x.p) + " | sbar: " + sign_symbols(x.sbar),
                csv_quote(join_ints(x.p)) + "," + csv_quote(sign_symbols(x.sbar)));
        };
        if (what == "garages") for_each_garage(n, visit);
        else for_each_sorted_naive(n, visit);
    } else if (what == "sorted-odd") {
        csv = "p,sbar,tau\n";
        for_each_sorted_odd(n, [&](const SortedOddShifted& y) {
            std::string tau;
            for (const auto& [i, k] : y.tau)
                tau += "(" + std::to_string(i) + "," + std::to_string(k) + ")";
            add(odd_to_json(y),
                "p: " + join_ints(y.p) + " | sbar: " + sign_symbols(y.sbar) + " | tau: " + tau,
                csv_quote(join_ints(y.p)) + "," + csv_quote(sign_symbols(y.sbar)) + "," +
                    csv_quote(tau));
        });
    } else { // schroeder-paths
        csv = "path\n";
        for_each_schroeder_path(n, [&](const std::string& steps) { add(Json(steps), steps, steps); });
    }

    if (c.format == "json") return emit(c, arr.dump(2) + "\n");
    return emit(c, c.format == "csv" ? csv : text);
}

// ---- character ------------------------------------------------------------

ClassFunction compute_character(int n, const std::string& which) {
    if (which == "trivial") return trivial_character(n);
    if (which == "sign") return sign_character(n);
    if (which == "regular") return regular_character(n);
    if (which == "pf") return pf_character(n);
    if (which == "exterior") return exterior_character(n);
    if (which == "naive") return naive_character(n);
    return spin_naive_character(n);
}

int run_character(const Common& c, int n, const std::string& which) {
    if (n > 12) return usage_error("character is bounded by n <= 12");

    const std::string key = cache_key("character-" + which, n);
    Json payload;
    bool have = false;
    if (!c.no_cache)
        if (auto hit = cache_load(cache_dir_of(c), key)) {
            payload = std::move(*hit);
            have = true;
        }
    if (!have) {
        payload = classfunction_to_json(compute_character(n, which));
        if (!c.no_cache) cache_store(cache_dir_of(c), key, payload);
    }

    if (c.format == "json") return emit(c, payload.dump(2) + "\n");
    ClassFunction chi = classfunction_from_json(payload);
    if (c.format == "csv") {
        std::string out = "type,value\n";
        for (const auto& [lam, v] : chi.values())
            out += csv_quote(lam.to_string()) + "," + csv_quote(v.to_string()) + "\n";
        return emit(c, out);
    }
    std::string out;
    for (const auto& [lam, v] : chi.values())
        out += lam.to_string() + ": " + v.to_string() + "\n";
    return emit(c, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, expansion, and verification for signed parking objects"};
    app.require_subcommand(1);

    Common common;
    int n = 1, max_n = 5, brute_bound = 5;
    std::string target = "sh", basis = "p", what, suite = "all", which;

    auto* expand = app.add_subcommand("expand", "p- or V-basis expansions of the module sums");
    expand->add_option("--n", n, "degree")->required()->check(CLI::Range(1, 1 << 20));
    expand->add_option("--target", target, "which sum to expand")
        ->check(CLI::IsMember({"pf", "sh", "sh_t"}));
    expand->add_option("--basis", basis, "expansion basis")
        ->check(CLI::IsMember({"p", "v-odd", "v-naive"}));
    add_common(expand, common);

    auto* count = app.add_subcommand("count", "enumeration counts against closed forms");
    count->add_option("--n", n, "degree")->required()->check(CLI::Range(1, 1 << 20));
    count->add_option("--what", what, "family to count")
        ->required()
        ->check(CLI::IsMember({"pf", "sorted-pf", "naive", "sorted-naive", "garages",
                               "sorted-odd", "schroeder-paths"}));
    add_common(count, common);

    auto* verify = app.add_subcommand("verify", "run identity/combinatorics/character/Clifford checks");
    verify->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"identities", "combinatorics", "characters", "clifford", "all"}));
    verify->add_option("--max-n", max_n, "largest degree to check")->check(CLI::Range(1, 12));
    verify->add_option("--brute-bound", brute_bound, "largest degree for brute-force oracles")
        ->check(CLI::Range(1, 8));
    add_common(verify, common);

    auto* enumerate = app.add_subcommand("enumerate", "dump an enumerated family");
    enumerate->add_option("--n", n, "degree")->required()->check(CLI::Range(1, 1 << 20));
    enumerate->add_option("--what", what, "family to enumerate")
        ->required()
        ->check(CLI::IsMember({"pf", "sorted-pf", "naive", "sorted-naive", "garages",
                               "sorted-odd", "schroeder-paths"}));
    add_common(enumerate, common);

    auto* character = app.add_subcommand("character", "class-function tables");
    character->add_option("--n", n, "degree")->required()->check(CLI::Range(1, 1 << 20));
    character->add_option("--which", which, "which character")
        ->required()
        ->check(CLI::IsMember(
            {"trivial", "sign", "regular", "pf", "exterior", "naive", "spin-naive"}));
    add_common(character, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(expand)) return run_expand(common, n, target, basis);
        if (app.got_subcommand(count)) return run_count(common, n, what);
        if (app.got_subcommand(verify)) return run_verify(common, suite, max_n, brute_bound);
        if (app.got_subcommand(enumerate)) return run_enumerate(common, n, what);
        return run_character(common, n, which);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
