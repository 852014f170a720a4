#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "k3/cyclotomic.hpp"
#include "k3/deadline.hpp"
#include "k3/errors.hpp"
#include "k3/modp.hpp"
#include "k3/obstruction.hpp"
#include "k3/padic.hpp"
#include "k3/parallel.hpp"
#include "k3/salem.hpp"

namespace k3::cli {

namespace {

using json = nlohmann::ordered_json;

struct Result {
    json j;
    std::string text;
};

std::string set_text(const std::vector<uint64_t>& v) {
    if (v.empty()) return "∅";
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

std::string int_text(const Int& x) { return x.get_str(); }

json index_json(const IntPoly& f, const IndexMap& idx) {
    auto dec = decompose(f);
    json pf = json::array();
    for (std::size_t k = 0; k < idx.per_factor.size(); ++k)
        pf.push_back({{"factor", to_string(dec.type1[k].f)}, {"values", idx.per_factor[k]}});
    return {{"r", idx.r}, {"s", idx.s}, {"i_plus", idx.i_plus}, {"i_minus", idx.i_minus}, {"per_factor", pf}};
}

std::string index_text(const IntPoly& f, const IndexMap& idx) {
    auto dec = decompose(f);
    std::ostringstream o;
    o << "(r, s) = (" << idx.r << ", " << idx.s << "), i+ = " << idx.i_plus << ", i- = " << idx.i_minus;
    for (std::size_t k = 0; k < idx.per_factor.size(); ++k) {
        o << "; " << to_string(dec.type1[k].f) << ": [";
        for (std::size_t t = 0; t < idx.per_factor[k].size(); ++t) o << (t ? ", " : "") << idx.per_factor[k][t];
        o << "]";
    }
    return o.str();
}

// "2,-2;4" -> {{2, -2}, {4}}
std::vector<std::vector<int>> parse_pairs(const std::string& s) {
    std::vector<std::vector<int>> out;
    std::stringstream groups(s);
    std::string g;
    while (std::getline(groups, g, ';')) {
        std::vector<int> v;
        std::stringstream items(g);
        std::string item;
        while (std::getline(items, item, ',')) {
            std::size_t used = 0;
            int x = 0;
            try {
                x = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw DomainError("--pairs: bad integer '" + item + "'");
            }
            if (used != item.size()) throw DomainError("--pairs: bad integer '" + item + "'");
            v.push_back(x);
        }
        out.push_back(std::move(v));
    }
    return out;
}

Result do_factor(const std::string& text, std::optional<uint64_t> mod, uint64_t seed) {
    IntPoly f = parse_poly(text);
    Result r;
    r.j["polynomial"] = to_string(f);
    json fs = json::array();
    std::ostringstream o;
    if (mod) {
        uint64_t p = *mod;
        if (!is_prime_u64(p)) throw DomainError("--mod: " + std::to_string(p) + " is not prime");
        ModPoly g = reduce_mod_p(f, p);
        if (g.is_zero()) throw DomainError("polynomial vanishes mod " + std::to_string(p));
        r.j["modulus"] = p;
        o << to_string(g) << " =";
        if (g.lead() != 1) o << " " << g.lead();
        for (auto& [q, m] : factor_mod_p(g, seed)) {
            fs.push_back({{"factor", to_string(q)}, {"multiplicity", m}});
            o << " (" << to_string(q) << ")" << (m > 1 ? "^" + std::to_string(m) : "");
        }
    } else {
        o << to_string(f) << " =";
        for (auto& [q, m] : factor_over_Q(f)) {
            fs.push_back({{"factor", to_string(q)}, {"multiplicity", m}});
            o << " (" << to_string(q) << ")" << (m > 1 ? "^" + std::to_string(m) : "");
        }
    }
    r.j["factors"] = fs;
    r.text = o.str();
    return r;
}

Result do_cyclo_phi(uint64_t n) {
    const IntPoly& f = cyclotomic(n);
    return {{{"n", n}, {"phi", to_string(f)}}, "Φ_" + std::to_string(n) + " = " + to_string(f)};
}

Result do_cyclo_shape(uint64_t n, uint64_t p) {
    auto s = cyclo_shape(n, p);
    Result r;
    r.j = {{"n", s.n},           {"p", s.p},
           {"e", s.e},           {"m", s.m},
           {"factor_degree", s.factor_degree}, {"factor_count", s.factor_count},
           {"multiplicity", s.power},          {"symmetric", s.symmetric}};
    std::ostringstream o;
    o << "Φ_" << n << " mod " << p << ": " << s.factor_count << " factor" << (s.factor_count == 1 ? "" : "s")
      << " of degree " << s.factor_degree << ", each to the power " << s.power << ", "
      << (s.symmetric ? "symmetric" : "not symmetric") << " (n = " << p << "^" << s.e << " * " << s.m << ")";
    r.text = o.str();
    return r;
}

Result do_cyclo_pi(uint64_t n, uint64_t n2) {
    auto v = pi_cyclo(n, n2);
    return {{{"n", n}, {"n2", n2}, {"pi", v}}, "Π = " + set_text(v)};
}

Result do_cyclo_csets(int d) {
    auto c = c_sets(d);
    std::string name = std::to_string(d);
    return {{{"d", d}, {"tilde_C", c.tilde}, {"C", c.c}},
            "C~_" + name + " = " + set_text(c.tilde) + "\nC_" + name + " = " + set_text(c.c)};
}

Result do_pi(const std::string& a, const std::string& b) {
    IntPoly f = parse_poly(a), g = parse_poly(b);
    auto res = pi_set(f, g);
    Result r;
    std::vector<uint64_t> ps;
    json per = json::array();
    std::ostringstream o;
    for (auto& pp : res.primes) {
        ps.push_back(pp.p);
        json commons = json::array();
        for (auto& m : pp.common) commons.push_back(to_string(m));
        per.push_back({{"p", pp.p}, {"common", commons}});
    }
    o << "Π = " << set_text(ps) << "\nRes = " << int_text(res.res);
    for (auto& pp : res.primes) {
        o << "\n  p = " << pp.p << ":";
        for (auto& m : pp.common) o << " " << to_string(m);
    }
    r.j = {{"f", to_string(f)}, {"g", to_string(g)}, {"resultant", int_text(res.res)}, {"pi", ps}, {"primes", per}};
    if (res.shared_factor) {
        r.j["shared_factor"] = to_string(*res.shared_factor);
        o << "\nshared factor " << to_string(*res.shared_factor);
    }
    r.text = o.str();
    return r;
}

Result do_symbols(const std::string& a, uint64_t p) {
    IntPoly f = parse_poly(a);
    if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
    auto set = symbol_set(f, p);
    json m = json::array();
    std::string t;
    for (auto& x : set.members) {
        m.push_back(to_string(x));
        t += (t.empty() ? "" : ", ") + to_string(x);
    }
    return {{{"polynomial", to_string(f)}, {"p", p}, {"symbols", m}},
            "symbols at " + std::to_string(p) + ": " + (t.empty() ? "∅" : "{" + t + "}")};
}

IndexMap pick_index(const IntPoly& f, int r, int s, std::optional<int> ip, std::optional<int> im,
                    const std::string& pairs) {
    if (!pairs.empty()) {
        if (!ip || !im) throw DomainError("--pairs requires --iplus and --iminus");
        IndexMap idx{*ip, *im, parse_pairs(pairs), r, s};
        validate_index(f, idx);
        return idx;
    }
    for (auto& idx : enumerate_index_maps(f, r, s))
        if ((!ip || idx.i_plus == *ip) && (!im || idx.i_minus == *im)) return idx;
    throw DomainError("no index map at the requested signature and values on X -+ 1");
}

Result do_obstruct(const std::string& a, int r, int s, std::optional<int> ip, std::optional<int> im,
                   const std::string& pairs, uint64_t seed) {
    IntPoly f = parse_poly(a);
    IndexMap idx = pick_index(f, r, s, ip, im, pairs);
    auto rep = obstruction_map(f, idx, seed);
    const auto& eq = rep.eq;
    Result out;
    json classes = json::array(), edges = json::array();
    std::ostringstream o;
    o << "index: " << index_text(f, idx) << "\nclasses:";
    for (auto& c : eq.classes) {
        json members = json::array();
        o << "\n  {";
        for (std::size_t t = 0; t < c.size(); ++t) {
            members.push_back(to_string(eq.elements[c[t]]));
            o << (t ? ", " : "") << to_string(eq.elements[c[t]]);
        }
        o << "}";
        classes.push_back(members);
    }
    o << "\nedges:";
    for (auto& e : eq.edges) {
        edges.push_back({{"a", to_string(eq.elements[e.a])},
                         {"b", to_string(eq.elements[e.b])},
                         {"p", e.p},
                         {"common", to_string(e.common)}});
        o << "\n  " << to_string(eq.elements[e.a]) << " ~ " << to_string(eq.elements[e.b]) << " at p = " << e.p
          << " via " << to_string(e.common);
    }
    if (eq.edges.empty()) o << " none";
    o << "\nobstruction bits:";
    for (std::size_t k = 0; k < rep.values.size(); ++k) o << " " << rep.values[k];
    o << " (reduced rank " << rep.reduced_rank << ")\n"
      << (rep.vanishes ? "obstruction vanishes" : "obstruction does not vanish");
    out.j = {{"polynomial", to_string(f)}, {"index", index_json(f, idx)},
             {"classes", classes},          {"edges", edges},
             {"omega_basis", rep.omega_basis}, {"values", rep.values},
             {"reduced_rank", rep.reduced_rank}, {"vanishes", rep.vanishes},
             {"reference", index_json(f, rep.reference)}};
    out.text = o.str();
    return out;
}

Result do_idx(const std::string& a, int r, int s, std::size_t limit, bool construct, std::optional<int> ip,
              std::optional<int> im, uint64_t seed) {
    IntPoly f = parse_poly(a);
    Result out;
    if (construct) {
        if (!ip || !im) throw DomainError("--construct requires --iplus and --iminus");
        auto v = construct_vanishing_index(f, *ip, *im, seed);
        out.j = {{"polynomial", to_string(f)}, {"route", v.route}, {"index", index_json(f, v.map)}};
        out.text = index_text(f, v.map) + "\nroute: " + v.route;
        return out;
    }
    auto maps = enumerate_index_maps(f, r, s, limit);
    json arr = json::array();
    std::string t;
    for (auto& m : maps) {
        arr.push_back(index_json(f, m));
        t += index_text(f, m) + "\n";
    }
    out.j = {{"polynomial", to_string(f)}, {"r", r}, {"s", s}, {"count", maps.size()}, {"maps", arr}};
    out.text = t + std::to_string(maps.size()) + " index map" + (maps.size() == 1 ? "" : "s");
    return out;
}

Result do_salem_check(const std::string& a) {
    IntPoly s = parse_poly(a);
    bool ok = is_salem_polynomial(s);
    return {{{"polynomial", to_string(s)}, {"degree", s.degree()}, {"is_salem", ok}},
            std::string(ok ? "Salem polynomial" : "not a Salem polynomial")};
}

Result do_salem_realizable(const std::string& a, bool witness) {
    IntPoly s = parse_poly(a);
    Result out;
    if (!is_salem_polynomial(s)) {
        out.j = {{"polynomial", to_string(s)}, {"degree", s.degree()}, {"is_salem", false}, {"realizable", nullptr},
                 {"criterion", nullptr},       {"witnesses", json::array()}, {"witness_F", nullptr}};
        out.text = "not a Salem polynomial";
        return out;
    }
    auto v = realizable_nonprojective(s, witness);
    json ws = json::array();
    std::ostringstream o;
    o << "degree " << v.degree << ", " << (v.realizable ? "nonprojectively realizable" : "not nonprojectively realizable")
      << " (" << to_string(v.criterion) << ")";
    for (auto& w : v.witnesses) {
        json primes = json::array();
        for (auto& pp : w.primes) {
            primes.push_back({{"p", pp.p}, {"common_factor", to_string(pp.common.front())}});
            o << "\n  l = " << w.l << ", p = " << pp.p << ": " << to_string(pp.common.front());
        }
        ws.push_back({{"l", w.l}, {"primes", primes}});
    }
    if (v.witness_F) o << "\nF = " << to_string(*v.witness_F);
    out.j = {{"polynomial", to_string(s)},
             {"degree", v.degree},
             {"is_salem", true},
             {"realizable", v.realizable},
             {"criterion", to_string(v.criterion)},
             {"witnesses", ws},
             {"witness_F", v.witness_F ? json(to_string(*v.witness_F)) : json(nullptr)}};
    out.text = o.str();
    return out;
}

// Monic trace polynomials of degree d/2 with lower coefficients in [-bound, bound].
Result do_salem_scan(int d, int bound) {
    if (d != 10 && d != 18) throw DomainError("--scan: degree must be 10 or 18");
    if (bound < 0) throw DomainError("--scan: bound must be nonnegative");
    int k = d / 2;
    double total_d = std::pow(2.0 * bound + 1, k);
    if (total_d > 2e7) throw DomainError("--scan: search space exceeds 2e7 candidates");
    std::size_t total = static_cast<std::size_t>(total_d);
    std::vector<int> status(total, 0);  // 1 Salem, 2 Salem with (Square), 3 not realizable
    parallel_for(total, [&](std::size_t code) {
        check_deadline();
        std::vector<Int> c;
        std::size_t rest = code;
        for (int i = 0; i < k; ++i) {
            c.emplace_back(static_cast<long>(rest % (2 * bound + 1)) - bound);
            rest /= 2 * bound + 1;
        }
        c.emplace_back(1);
        IntPoly s = symmetric_lift(IntPoly(c));
        if (!is_salem_polynomial(s)) return;
        status[code] = 1;
        if (!check_square(s).holds) return;
        status[code] = realizable_nonprojective(s).realizable ? 2 : 3;
    });
    std::size_t salem = 0, square = 0;
    json bad = json::array();
    std::string t;
    for (std::size_t code = 0; code < total; ++code) {
        if (status[code] == 0) continue;
        ++salem;
        if (status[code] >= 2) ++square;
        if (status[code] == 3) {
            std::vector<Int> c;
            std::size_t rest = code;
            for (int i = 0; i < k; ++i) {
                c.emplace_back(static_cast<long>(rest % (2 * bound + 1)) - bound);
                rest /= 2 * bound + 1;
            }
            c.emplace_back(1);
            std::string sp = to_string(symmetric_lift(IntPoly(c)));
            bad.push_back(sp);
            t += "\n  not realizable: " + sp;
        }
    }
    Result out;
    out.j = {{"degree", d},        {"bound", bound},  {"candidates", total},
             {"salem", salem},     {"square", square}, {"not_realizable", bad}};
    out.text = "scanned " + std::to_string(total) + " trace polynomials: " + std::to_string(salem) +
               " Salem, " + std::to_string(square) + " with (Square), " + std::to_string(bad.size()) +
               " not realizable" + t;
    return out;
}

int code_for(const std::exception_ptr& e, std::string& msg) {
    try {
        std::rethrow_exception(e);
    } catch (const DomainError& x) {
        msg = x.what();
        return 2;
    } catch (const Undecided& x) {
        msg = std::string("undecided: ") + x.what();
        return 3;
    } catch (const Unsupported& x) {
        msg = std::string("unsupported: ") + x.what();
        return 3;
    } catch (const Timeout& x) {
        msg = "timeout";
        return 3;
    } catch (const InternalError& x) {
        msg = std::string("internal error: ") + x.what();
        return 1;
    } catch (const std::exception& x) {
        msg = x.what();
        return 1;
    }
}

struct Globals {
    bool json = false;
    bool witness = false;
    std::string batch;
    std::optional<uint64_t> seed;
    long timeout_ms = 0;
};

int run_batch(const Globals& g, std::ostream& out, std::ostream& err) {
    std::ifstream in(g.batch);
    if (!in) {
        err << "error: cannot open batch file " << g.batch << "\n";
        return 2;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    std::vector<std::string> rendered(lines.size());
    std::vector<int> codes(lines.size(), 0);
    parallel_for(lines.size(), [&](std::size_t i) {
        std::vector<std::string> args = split_words(lines[i]);
        args.push_back("--json");
        if (g.witness) args.push_back("--witness");
        if (g.seed) args.insert(args.end(), {"--seed", std::to_string(*g.seed)});
        if (g.timeout_ms > 0) args.insert(args.end(), {"--timeout-ms", std::to_string(g.timeout_ms)});
        std::ostringstream o, e;
        codes[i] = run(args, o, e);
        json line = {{"input", lines[i]}, {"exit", codes[i]}};
        if (codes[i] == 0) {
            line["result"] = json::parse(o.str());
        } else {
            std::string m = e.str();
            while (!m.empty() && m.back() == '\n') m.pop_back();
            if (m.rfind("error: ", 0) == 0) m = m.substr(7);
            line["error"] = m;
        }
        rendered[i] = line.dump();
    });
    for (auto& r : rendered) out << r << "\n";
    return *std::max_element(codes.begin(), codes.end(), [](int a, int b) { return a < b; });
}

}  // namespace

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_word = false;
    char quote = 0;
    for (char ch : line) {
        if (quote) {
            if (ch == quote) quote = 0;
            else cur += ch;
        } else if (ch == '"' || ch == '\'') {
            quote = ch;
            in_word = true;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (in_word) out.push_back(cur);
            cur.clear();
            in_word = false;
        } else {
            cur += ch;
            in_word = true;
        }
    }
    if (quote) throw DomainError("unterminated quote in: " + line);
    if (in_word) out.push_back(cur);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact obstruction and Salem realizability computations", "k3"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    Globals g;
    uint64_t seed_value = 0;
    app.add_flag("--json", g.json, "emit a single JSON document");
    app.add_flag("--witness", g.witness, "construct a witness polynomial where one exists");
    app.add_option("--batch", g.batch, "file with one command per line; prints one JSON line per input");
    auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized splitting and index assignment");
    app.add_option("--timeout-ms", g.timeout_ms, "per-item time budget in milliseconds")->check(CLI::NonNegativeNumber);

    std::string f1, f2;
    uint64_t n1 = 0, n2 = 0;
    int d = 0, r = 0, s = 0, bound = 5, scan_degree = 10;
    std::size_t limit = 1000;
    std::optional<uint64_t> mod;
    std::optional<int> ip, im;
    std::string pairs;
    bool construct = false, scan = false;

    auto* factor = app.add_subcommand("factor", "factor over Q, or over F_p with --mod");
    factor->add_option("f", f1, "polynomial")->required();
    factor->add_option("--mod", mod, "prime modulus");

    auto* cyclo = app.add_subcommand("cyclo", "cyclotomic polynomials");
    cyclo->require_subcommand(1);
    auto* c_phi = cyclo->add_subcommand("phi", "print Phi_n");
    c_phi->add_option("n", n1)->required()->check(CLI::PositiveNumber);
    auto* c_shape = cyclo->add_subcommand("shape", "factorization shape of Phi_n mod p");
    c_shape->add_option("n", n1)->required()->check(CLI::PositiveNumber);
    c_shape->add_option("p", n2)->required();
    auto* c_pi = cyclo->add_subcommand("pi", "closed-form Pi(Phi_n, Phi_n')");
    c_pi->add_option("n", n1)->required()->check(CLI::PositiveNumber);
    c_pi->add_option("n2", n2)->required()->check(CLI::PositiveNumber);
    auto* c_csets = cyclo->add_subcommand("csets", "the sets C_d for d = 10, 18");
    c_csets->add_option("d", d)->required();

    auto* pi = app.add_subcommand("pi", "prime set Pi(f, g) with common members");
    pi->add_option("f", f1)->required();
    pi->add_option("g", f2)->required();

    auto* symbols = app.add_subcommand("symbols", "reductions of the symmetric Q_p-factors");
    symbols->add_option("f", f1)->required();
    symbols->add_option("p", n1)->required();

    auto* obstruct = app.add_subcommand("obstruct", "equivalence classes and obstruction map");
    obstruct->add_option("F", f1)->required();
    obstruct->add_option("--r", r)->required();
    obstruct->add_option("--s", s)->required();
    obstruct->add_option("--iplus", ip);
    obstruct->add_option("--iminus", im);
    obstruct->add_option("--pairs", pairs, "circle-pair values, e.g. \"2,-2;4\" (one group per factor)");

    auto* idx = app.add_subcommand("idx", "enumerate index maps, or construct a vanishing one");
    idx->add_option("F", f1)->required();
    idx->add_option("--r", r);
    idx->add_option("--s", s);
    idx->add_option("--limit", limit);
    idx->add_flag("--construct", construct);
    idx->add_option("--iplus", ip);
    idx->add_option("--iminus", im);

    auto* salem = app.add_subcommand("salem", "Salem polynomials");
    salem->require_subcommand(1);
    auto* s_check = salem->add_subcommand("check", "recognize a Salem polynomial");
    s_check->add_option("S", f1)->required();
    auto* s_real = salem->add_subcommand("realizable", "nonprojective realizability verdict");
    s_real->add_option("S", f1);
    s_real->add_flag("--scan", scan, "search trace polynomials for non-realizable Salem numbers");
    s_real->add_option("--degree", scan_degree, "degree for --scan (10 or 18)");
    s_real->add_option("--bound", bound, "coefficient bound for --scan");

    // A leading space keeps polynomials such as "-X^2 + 1" from reading as flags.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    for (auto& a : rev)
        if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a.find('X') != std::string::npos) a.insert(0, " ");
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (seed_opt->count()) g.seed = seed_value;

    if (!g.batch.empty()) return run_batch(g, out, err);
    if (app.get_subcommands().empty()) {
        err << "error: a command is required (run with --help)\n";
        return 2;
    }

    auto deadline = g.timeout_ms > 0 ? Clock::now() + std::chrono::milliseconds(g.timeout_ms) : Clock::time_point::max();
    DeadlineScope scope(deadline);
    Result res;
    try {
        if (factor->parsed()) {
            res = do_factor(f1, mod, g.seed.value_or(kDefaultSeed));
        } else if (c_phi->parsed()) {
            res = do_cyclo_phi(n1);
        } else if (c_shape->parsed()) {
            res = do_cyclo_shape(n1, n2);
        } else if (c_pi->parsed()) {
            res = do_cyclo_pi(n1, n2);
        } else if (c_csets->parsed()) {
            res = do_cyclo_csets(d);
        } else if (pi->parsed()) {
            res = do_pi(f1, f2);
        } else if (symbols->parsed()) {
            res = do_symbols(f1, n1);
        } else if (obstruct->parsed()) {
            res = do_obstruct(f1, r, s, ip, im, pairs, g.seed.value_or(0));
        } else if (idx->parsed()) {
            if (!construct && (idx->count("--r") == 0 || idx->count("--s") == 0))
                throw DomainError("idx: --r and --s are required unless --construct is given");
            res = do_idx(f1, r, s, limit, construct, ip, im, g.seed.value_or(0));
        } else if (s_check->parsed()) {
            res = do_salem_check(f1);
        } else if (s_real->parsed()) {
            if (scan) res = do_salem_scan(scan_degree, bound);
            else if (f1.empty()) throw DomainError("salem realizable: a polynomial is required unless --scan is given");
            else res = do_salem_realizable(f1, g.witness);
        }
        check_deadline();
    } catch (...) {
        std::string msg;
        int code = code_for(std::current_exception(), msg);
        err << "error: " << msg << "\n";
        return code;
    }
    out << (g.json ? res.j.dump(2) : res.text) << "\n";
    return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace k3::cli
