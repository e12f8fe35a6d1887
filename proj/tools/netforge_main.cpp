// netforge CLI: enumerate squares, search orthogonal mates, classify pairs
// up to net-equivalence, decide realizability, verify certificates, and run
// a quick self-test.
//
// Exit codes: 0 success, 1 verification reported "fail", 2 invalid input,
// 3 budget/guard exceeded, 4 internal invariant violation.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netforge/equivalence.hpp"
#include "netforge/net.hpp"
#include "netforge/realization.hpp"
#include "netforge/serialization.hpp"

namespace {

using namespace netforge;
using serialization::json;

struct Common {
    std::string out;
    std::string format = "text";
    bool deterministic = false;
    int workers = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "write the report to this file instead of stdout");
    cmd->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_flag("--deterministic", c.deterministic,
                  "suppress the timestamp field so identical runs are byte-identical");
    cmd->add_option("--workers", c.workers, "worker count (never changes report content)")
        ->check(CLI::PositiveNumber);
}

void stamp(json& report, const Common& c) {
    if (c.deterministic) return;
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    report["generated_at"] = buf;
}

void emit(const std::string& text, const Common& c) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + c.out);
    f << text;
}

std::string square_text_block(const combinat::LatinSquare& L) { return L.to_text(); }

// square-spec: "cyclic:k", an inline row-major grid ("1 2 3 ..."), or a
// file path containing the text or JSON form
combinat::LatinSquare parse_square_spec(const std::string& spec) {
    if (spec.rfind("cyclic:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(spec.substr(7));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad cyclic spec: " + spec);
        }
        if (k < 1 || k > 12) throw std::invalid_argument("cyclic order out of range");
        std::string cyc = "(";
        for (int i = 1; i <= k; ++i) cyc += (i > 1 ? " " : "") + std::to_string(i);
        cyc += ")";
        return combinat::cyclic_square(combinat::Permutation::from_cycles(cyc, k));
    }
    if (spec.find_first_of(" ,\n") != std::string::npos) {
        std::string body = spec;
        for (char& ch : body)
            if (ch == ',') ch = ' ';
        std::istringstream in(body);
        std::vector<int> cells;
        int v;
        while (in >> v) cells.push_back(v);
        int k = 1;
        while (k * k < static_cast<int>(cells.size())) ++k;
        if (k * k != static_cast<int>(cells.size()))
            throw std::invalid_argument("inline grid is not square");
        return combinat::LatinSquare::from_grid(k, std::move(cells));
    }
    std::ifstream f(spec);
    if (!f) throw std::invalid_argument("cannot read square spec: " + spec);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string content = buf.str();
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{')
        return serialization::square_from_json(json::parse(content));
    return combinat::LatinSquare::from_text(content);
}

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read file: " + path);
    return json::parse(f);
}

// ---- enumerate ----------------------------------------------------------

int cmd_enumerate(int order, bool reduced, const Common& c) {
    std::uint64_t count = 0;
    std::ostringstream listing;
    const bool want_listing = !c.out.empty();
    json squares = json::array();
    combinat::enumerate_latin(order, reduced, [&](const combinat::LatinSquare& L) {
        ++count;
        if (!want_listing) return;
        if (c.format == "json")
            squares.push_back(serialization::square_to_json(L));
        else
            listing << square_text_block(L) << "\n";
    });
    if (c.format == "json") {
        json report{{"command", "enumerate"}, {"order", order}, {"reduced", reduced},
                    {"count", count}};
        if (want_listing) report["squares"] = std::move(squares);
        stamp(report, c);
        emit(report.dump(2) + "\n", c);
        if (!c.out.empty()) std::cout << count << "\n";
    } else {
        if (want_listing) emit(listing.str(), c);
        std::cout << count << "\n";
    }
    return 0;
}

// ---- mates ---------------------------------------------------------------

int cmd_mates(const std::string& spec, bool reduced, const Common& c) {
    combinat::LatinSquare L = parse_square_spec(spec);
    auto transversals = combinat::find_transversals(L);
    auto decompositions = combinat::all_disjoint_decompositions(L);
    auto mates = combinat::orthogonal_mates(L, reduced);

    if (c.format == "json") {
        json list = json::array();
        for (const auto& m : mates) list.push_back(serialization::square_to_json(m));
        json report{{"command", "mates"},
                    {"k", L.order()},
                    {"square", serialization::square_to_json(L)},
                    {"reduced", reduced},
                    {"transversals", transversals.size()},
                    {"disjoint_decompositions", decompositions.size()},
                    {"mate_count", mates.size()},
                    {"mates", std::move(list)}};
        stamp(report, c);
        emit(report.dump(2) + "\n", c);
    } else if (c.format == "csv") {
        std::ostringstream out;
        out << "mate_index,grid\n";
        for (size_t i = 0; i < mates.size(); ++i) {
            out << i << ",";
            const auto& flat = mates[i].flat();
            for (size_t j = 0; j < flat.size(); ++j) out << (j ? " " : "") << flat[j];
            out << "\n";
        }
        emit(out.str(), c);
    } else {
        std::ostringstream out;
        out << "square of order " << L.order() << ":\n" << square_text_block(L);
        out << "transversals: " << transversals.size() << "\n";
        out << "disjoint decompositions: " << decompositions.size() << "\n";
        out << (reduced ? "reduced mates: " : "mates: ") << mates.size() << "\n";
        for (const auto& m : mates) out << "\n" << square_text_block(m);
        emit(out.str(), c);
    }
    return 0;
}

// ---- classify -------------------------------------------------------------

int cmd_classify(int order, std::uint64_t budget, const Common& c) {
    equivalence::Classification cls = equivalence::classify_ols(order, budget);
    if (c.format == "csv") {
        emit(serialization::classification_to_csv(cls), c);
    } else if (c.format == "json") {
        json report = serialization::classification_to_json(cls);
        report["command"] = "classify";
        stamp(report, c);
        emit(report.dump(2) + "\n", c);
    } else {
        std::ostringstream out;
        out << "|OLS_" << order << "| = " << cls.total_pairs << "\n";
        out << "classes: " << cls.classes.size() << "\n";
        for (const auto& cl : cls.classes) {
            out << "  class " << cl.class_id << " orbit size " << cl.orbit_size << "\n";
            for (const auto& [kind, count] : cl.rejected_moves)
                if (count) out << "    rejected " << kind << ": " << count << "\n";
        }
        if (cls.resolved_open_bound) out << *cls.resolved_open_bound << "\n";
        emit(out.str(), c);
    }
    return 0;
}

// ---- realize ---------------------------------------------------------------

json realize_one(const combinat::OlsPair& p) {
    realization::RealizationVerdict v = realization::decide_realizability(p);
    return serialization::verdict_to_json(p.first.order(), equivalence::stable_pair_hash(p),
                                          v);
}

std::vector<combinat::OlsPair> representative_pairs(int order) {
    using combinat::Permutation;
    auto cyc = [](const std::string& s, int k) {
        return combinat::cyclic_square(Permutation::from_cycles(s, k));
    };
    switch (order) {
        case 3: return {combinat::OlsPair(cyc("(123)", 3), cyc("(132)", 3))};
        case 4: {
            auto L1 = combinat::LatinSquare::from_grid(
                4, {1, 2, 3, 4, 2, 1, 4, 3, 3, 4, 1, 2, 4, 3, 2, 1});
            auto L2 = combinat::LatinSquare::from_grid(
                4, {1, 2, 3, 4, 4, 3, 2, 1, 2, 1, 4, 3, 3, 4, 1, 2});
            return {combinat::OlsPair(L1, L2)};
        }
        case 5:
            return {combinat::OlsPair(cyc("(12345)", 5), cyc("(15432)", 5)),
                    combinat::OlsPair(cyc("(12345)", 5), cyc("(14253)", 5))};
        default:
            throw std::invalid_argument("realize --order supports 3, 4, 5, 6");
    }
}

int cmd_realize(std::optional<int> order, const std::string& pair_file, const Common& c) {
    json verdicts = json::array();
    if (!pair_file.empty()) {
        verdicts.push_back(realize_one(serialization::pair_from_json(read_json_file(pair_file))));
    } else if (order && *order == 6) {
        realization::RealizationVerdict v = realization::decide_realizability_empty_order(6);
        verdicts.push_back(serialization::verdict_to_json(6, "-", v));
    } else if (order) {
        for (const auto& p : representative_pairs(*order)) verdicts.push_back(realize_one(p));
    } else {
        throw std::invalid_argument("realize needs --order or --pair");
    }

    if (c.format == "json") {
        json report{{"command", "realize"}, {"verdicts", verdicts}};
        stamp(report, c);
        emit(report.dump(2) + "\n", c);
    } else if (c.format == "csv") {
        std::ostringstream out;
        out << "k,class_id,outcome\n";
        for (const json& v : verdicts)
            out << v["k"] << "," << v["class_id"].get<std::string>() << ","
                << v["outcome"].get<std::string>() << "\n";
        emit(out.str(), c);
    } else {
        std::ostringstream out;
        for (const json& v : verdicts) {
            out << "k=" << v["k"] << " class " << v["class_id"].get<std::string>() << ": "
                << v["outcome"].get<std::string>() << "\n";
            for (const json& line : v["trace"]) out << "  " << line.get<std::string>() << "\n";
        }
        emit(out.str(), c);
    }
    return 0;
}

// ---- incidence --------------------------------------------------------------

int cmd_incidence(const std::string& spec_a, const std::string& spec_b, const Common& c) {
    combinat::OlsPair p(parse_square_spec(spec_a), parse_square_spec(spec_b));
    net::NetIncidence chi = net::ols_to_incidence(p);
    if (c.format == "json") {
        emit(serialization::incidence_to_json(chi).dump(2) + "\n", c);
    } else {
        emit(serialization::incidence_to_text(chi), c);
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& cert_path, const std::string& incidence_path,
               const Common& c) {
    realization::CertificateMatrix cert =
        serialization::certificate_from_json(read_json_file(cert_path));
    net::NetIncidence chi;
    if (incidence_path.size() > 5 &&
        incidence_path.substr(incidence_path.size() - 5) == ".json") {
        chi = serialization::incidence_from_json(read_json_file(incidence_path));
    } else {
        std::ifstream f(incidence_path);
        if (!f) throw std::invalid_argument("cannot read file: " + incidence_path);
        std::stringstream buf;
        buf << f.rdbuf();
        chi = serialization::incidence_from_text(buf.str());
    }
    std::string witness;
    bool ok = realization::verify_certificate(cert, chi, &witness);
    if (c.format == "json") {
        json report{{"command", "verify"}, {"pass", ok}};
        if (!ok) report["witness"] = witness;
        stamp(report, c);
        emit(report.dump(2) + "\n", c);
    } else {
        emit(ok ? "pass\n" : "fail: " + witness + "\n", c);
    }
    return ok ? 0 : 1;
}

// ---- selftest --------------------------------------------------------------

int cmd_selftest(std::uint64_t seed, const Common& c) {
    std::ostringstream out;
    bool ok = true;
    auto check = [&](const std::string& name, bool pass) {
        out << (pass ? "ok   " : "FAIL ") << name << "\n";
        ok = ok && pass;
    };

    check("enumerate order 3 = 12", combinat::count_latin(3, false) == 12);
    check("enumerate order 4 = 576", combinat::count_latin(4, false) == 576);
    for (int k : {3, 4, 5, 6, 7}) {
        bool has = combinat::has_orthogonal_mate(
            parse_square_spec("cyclic:" + std::to_string(k)));
        check("cyclic:" + std::to_string(k) + " mate parity", has == (k % 2 == 1));
    }
    {
        auto cls = equivalence::classify_ols(3, equivalence::default_budget());
        check("classify order 3: one class", cls.classes.size() == 1);
        check("classify order 3: |OLS_3| = 72", cls.total_pairs == 72);
    }
    {
        auto pairs = representative_pairs(3);
        auto v = realization::decide_realizability(pairs[0]);
        bool realizable = v.outcome == realization::Outcome::Realizable && v.certificate &&
                          realization::verify_certificate(
                              *v.certificate, net::ols_to_incidence(pairs[0]), nullptr);
        check("realize order 3: verified certificate", realizable);
        std::string w;
        check("hessian certificate verifies",
              realization::verify_certificate(realization::hessian_certificate(),
                                              net::ols_to_incidence(pairs[0]), &w));
    }
    {
        // a short randomized move walk preserving orthogonality
        std::mt19937_64 rng(seed);
        auto p = representative_pairs(4)[0];
        bool preserved = true;
        for (int step = 0; step < 50 && preserved; ++step) {
            equivalence::PairMove m;
            int kind = static_cast<int>(rng() % 7);
            m.kind = static_cast<equivalence::PairMove::Kind>(kind);
            m.a = 1 + static_cast<int>(rng() % 4);
            m.b = 1 + static_cast<int>(rng() % 4);
            if (m.a == m.b) continue;
            auto r = equivalence::apply_pair_move(p, m);
            if (std::holds_alternative<combinat::OlsPair>(r)) {
                p = std::get<combinat::OlsPair>(r);
                preserved = combinat::are_orthogonal(p.first, p.second);
            }
        }
        check("random move walk preserves orthogonality (seed " + std::to_string(seed) + ")",
              preserved);
    }
    emit(out.str(), c);
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"netforge: orthogonal Latin squares, net equivalence and realizability"};
    app.require_subcommand(1);

    Common common;
    int order = 0;
    bool reduced = false;
    std::uint64_t budget = equivalence::default_budget();
    std::uint64_t seed = 12345;
    std::string square_spec, pair_file, cert_path, incidence_path;

    auto* enumerate = app.add_subcommand("enumerate", "count/list Latin squares of an order");
    enumerate->add_option("--order", order, "square order")->required()->check(CLI::Range(1, 6));
    enumerate->add_flag("--reduced", reduced, "first row and column fixed to 1..k");
    Common c_enum;
    add_common(enumerate, c_enum);

    auto* mates = app.add_subcommand("mates", "orthogonal mates of a square");
    mates->add_option("spec", square_spec, "cyclic:k, a file path, or an inline grid")
        ->required();
    mates->add_flag("--reduced", reduced, "one mate per symbol-relabeling class");
    Common c_mates;
    add_common(mates, c_mates);

    auto* classify = app.add_subcommand("classify", "classify OLS_k up to net-equivalence");
    classify->add_option("--order", order, "square order")->required()->check(CLI::Range(3, 6));
    classify->add_option("--budget", budget, "orbit BFS state budget");
    classify->add_option("--seed", seed, "accepted for interface parity; unused");
    Common c_classify;
    add_common(classify, c_classify);

    auto* realize = app.add_subcommand("realize", "decide realizability as lines in CP^2");
    auto* order_opt =
        realize->add_option("--order", order, "decide the class representatives of this order")
            ->check(CLI::Range(3, 6));
    realize->add_option("--pair", pair_file, "JSON file with a pair of orthogonal squares")
        ->excludes(order_opt);
    Common c_realize;
    add_common(realize, c_realize);

    std::string square_spec_b;
    auto* incidence =
        app.add_subcommand("incidence", "emit the chi incidence of an orthogonal pair");
    incidence->add_option("first", square_spec, "square spec (cyclic:k, file, inline grid)")
        ->required();
    incidence->add_option("second", square_spec_b, "square spec of the orthogonal mate")
        ->required();
    Common c_incidence;
    add_common(incidence, c_incidence);

    auto* verify = app.add_subcommand("verify", "verify a certificate against an incidence");
    verify->add_option("--cert", cert_path, "certificate JSON file")->required();
    verify->add_option("--incidence", incidence_path, "incidence JSON or 4-column text file")
        ->required();
    Common c_verify;
    add_common(verify, c_verify);

    auto* selftest = app.add_subcommand("selftest", "fast end-to-end sanity checks");
    selftest->add_option("--seed", seed, "seed for the randomized move walk");
    Common c_selftest;
    add_common(selftest, c_selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*enumerate) return cmd_enumerate(order, reduced, c_enum);
        if (*mates) return cmd_mates(square_spec, reduced, c_mates);
        if (*classify) return cmd_classify(order, budget, c_classify);
        if (*realize)
            return cmd_realize(order_opt->count() ? std::optional<int>(order) : std::nullopt,
                               pair_file, c_realize);
        if (*incidence) return cmd_incidence(square_spec, square_spec_b, c_incidence);
        if (*verify) return cmd_verify(cert_path, incidence_path, c_verify);
        if (*selftest) return cmd_selftest(seed, c_selftest);
    } catch (const equivalence::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
