#include "clifford/cli.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "clifford/ideal.hpp"
#include "clifford/structure.hpp"

namespace clifford::cli {

using nlohmann::json;

const char* verb_name(Verb verb) noexcept {
    switch (verb) {
    case Verb::SignatureInfo: return "signature-info";
    case Verb::Eval: return "eval";
    case Verb::IdealClassify: return "ideal classify";
    case Verb::Primes: return "primes";
    case Verb::Radical: return "radical";
    case Verb::Chains: return "chains";
    case Verb::Nilpotency: return "nilpotency";
    case Verb::Support: return "support";
    }
    return "?";
}

json to_json(const Report& report) {
    json sig = signature_to_json(report.signature);
    if (!report.relabel.empty()) sig["relabel"] = report.relabel;
    return {{"command", report.command}, {"signature", sig}, {"result", report.result}, {"elapsed_ms", report.elapsed_ms}};
}

Report report_from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.signature = signature_from_json(j.at("signature"));
    if (j.at("signature").contains("relabel")) r.relabel = j.at("signature").at("relabel").get<std::vector<unsigned>>();
    r.result = j.at("result");
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

Command parse_command(const std::vector<std::string>& args) {
    CLI::App app{"Ideal structure of Clifford algebras C(p,q,z)", "cliffideal"};
    app.fallthrough();
    app.require_subcommand(1);

    Command cmd;
    std::string signature;
    app.add_option("-s,--signature", signature, "p,q,z or a role string such as ++-0")->required();
    app.add_flag("--json", cmd.json, "Emit the machine-readable report");
    app.add_option("--seed", cmd.seed, "Seed for randomized checks");

    auto* info = app.add_subcommand("signature-info", "Class of C(p,q), volume element and central idempotents");
    auto* eval = app.add_subcommand("eval", "Evaluate an expression to canonical form");
    eval->add_option("expression", cmd.expression, "Expression such as \"(1+e2)*(1-e2)\"")->required();
    auto* ideal = app.add_subcommand("ideal", "Ideal operations");
    ideal->fallthrough();
    ideal->require_subcommand(1);
    auto* classify = ideal->add_subcommand("classify", "Classify the ideal generated by --gens");
    classify->add_option("--gens", cmd.gens, "Generators separated by ';'")->required();
    auto* primes = app.add_subcommand("primes", "Prime (= maximal) ideals");
    auto* radical = app.add_subcommand("radical", "Nil radical, its grading and a quasi-regularity spot check");
    auto* chains = app.add_subcommand("chains", "Strict ideal chains built from the null generators");
    chains->add_option("--k", cmd.k, "Chain length (at most z)")->required();
    bool asc = false;
    bool desc = false;
    chains->add_flag("--ascending", asc, "Only the ascending chain");
    chains->add_flag("--descending", desc, "Only the descending chain");
    auto* nilpotency = app.add_subcommand("nilpotency", "Nilpotency index of the ideal generated by --gens");
    nilpotency->add_option("--gens", cmd.gens, "Generators separated by ';'")->required();
    auto* support = app.add_subcommand("support", "Null supports and a finite generating set");
    support->add_option("--gens", cmd.gens, "Generators separated by ';'")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (info->parsed()) cmd.verb = Verb::SignatureInfo;
    if (eval->parsed()) cmd.verb = Verb::Eval;
    if (classify->parsed()) cmd.verb = Verb::IdealClassify;
    if (primes->parsed()) cmd.verb = Verb::Primes;
    if (radical->parsed()) cmd.verb = Verb::Radical;
    if (chains->parsed()) {
        cmd.verb = Verb::Chains;
        if (asc || desc) {
            cmd.ascending = asc;
            cmd.descending = desc;
        }
    }
    if (nilpotency->parsed()) cmd.verb = Verb::Nilpotency;
    if (support->parsed()) cmd.verb = Verb::Support;
    cmd.signature = parse_signature(signature);
    return cmd;
}

namespace {

json strings(const std::vector<Multivector>& vs) {
    json out = json::array();
    for (const Multivector& v : vs) out.push_back(to_string(v));
    return out;
}

json optional_index(const std::optional<std::uint64_t>& n) { return n ? json(*n) : json(nullptr); }

std::vector<Multivector> require_gens(const Command& cmd) {
    std::vector<Multivector> gens = parse_expression_list(cmd.signature.sig, cmd.gens);
    if (gens.empty()) throw std::invalid_argument("--gens lists no generators");
    return gens;
}

json signature_info(const Signature& sig) {
    const AlgebraClass cls = classify_pq(sig);
    json idempotents = nullptr;
    if (cls.idempotents) idempotents = {to_string(cls.idempotents->first), to_string(cls.idempotents->second)};
    return {{"dimension", sig.dimension()},
            {"class", to_string(cls.tag)},
            {"residue", signature_residue(sig)},
            {"volume_element", to_string(volume_element(sig))},
            {"idempotents", idempotents},
            {"radical_dim", (std::uint64_t{1} << sig.non_null()) * ((std::uint64_t{1} << sig.z()) - 1)}};
}

json eval(const Signature& sig, const std::string& text) {
    const Multivector u = parse_expression(sig, text);
    auto [body, rad] = radical_split(u);
    return {{"value", to_string(u)},
            {"body", to_string(body)},
            {"radical", to_string(rad)},
            {"null_support", null_support(u)},
            {"nilpotency_index", optional_index(element_nilpotency_index(u))}};
}

json classify(const Signature& sig, const std::vector<Multivector>& gens) {
    const Ideal ideal = ideal_closure(sig, gens);
    const ClassificationReport report = ideal_classify(ideal);
    return {{"verdict", to_string(report.verdict)},
            {"dim", report.dim},
            {"radical_intersection_dim", report.radical_dim},
            {"basis", strings(ideal.basis())},
            {"radical_intersection", strings(report.radical_intersection.basis())}};
}

json primes(const Signature& sig) {
    json list = json::array();
    for (const Ideal& p : prime_ideals(sig)) list.push_back({{"dim", p.dim()}, {"basis", strings(p.basis())}});
    return {{"class", to_string(classify_pq(sig).tag)}, {"primes", list}};
}

// Random element of the radical: small integer coefficients on a few
// blades that contain a null generator.
Multivector random_radical_element(const Signature& sig, std::mt19937_64& rng) {
    std::vector<Term> terms;
    const std::uint32_t nulls = sig.null_mask();
    const unsigned count = 1 + static_cast<unsigned>(rng() % 4);
    for (unsigned i = 0; i < count; ++i) {
        std::uint32_t mask = static_cast<std::uint32_t>(rng()) & sig.full_mask();
        if ((mask & nulls) == 0) mask |= std::uint32_t{1} << sig.non_null();
        const long coef = static_cast<long>(rng() % 7) - 3;
        terms.push_back({BasisBlade{mask}, Rational(coef)});
    }
    return Multivector(sig, std::move(terms));
}

json radical(const Signature& sig, std::uint64_t seed) {
    const Ideal rad = nil_radical(sig);
    json grading = json::array();
    for (unsigned i = 1; i <= sig.z(); ++i) {
        std::size_t count = 0;
        for (const Multivector& v : rad.basis()) count += radical_grade_component(v, i).is_zero() ? 0 : 1;
        grading.push_back({{"grade", i}, {"dim", count}});
    }
    unsigned checked = 0;
    if (sig.z() > 0) {
        std::mt19937_64 rng(seed);
        const Multivector one = Multivector::scalar(sig, 1);
        for (; checked < 8; ++checked) {
            const Multivector u = one + random_radical_element(sig, rng);
            const Multivector v = invert_unipotent(u);
            if (u * v != one || v * u != one) throw InternalContradiction("1 + x failed to invert for x = " + to_string(u - one));
        }
    }
    return {{"dim", rad.dim()},
            {"basis", strings(rad.basis())},
            {"jacobson_equals_nil", jacobson_radical(sig) == rad},
            {"grading", grading},
            {"quasi_regular_checked", checked},
            {"seed", seed}};
}

json chain_json(const Signature& sig, const std::vector<Ideal>& chain, bool ascending) {
    json list = json::array();
    std::string gen;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const std::string e = "e" + std::to_string(sig.non_null() + i);
        gen = gen.empty() ? e : gen + (ascending ? ";" : "*") + e;
        list.push_back({{"generators", gen}, {"dim", chain[i].dim()}});
    }
    return list;
}

json chains(const Signature& sig, unsigned k, bool ascending, bool descending) {
    json out = {{"k", k}};
    if (descending) out["descending"] = chain_json(sig, descending_chain(sig, k), false);
    if (ascending) out["ascending"] = chain_json(sig, ascending_chain(sig, k), true);
    return out;
}

json nilpotency(const Signature& sig, const std::vector<Multivector>& gens) {
    const Ideal ideal = ideal_closure(sig, gens);
    const auto index = ideal_nilpotency_index(ideal);
    json elements = json::array();
    for (const Multivector& g : gens) {
        elements.push_back({{"element", to_string(g)}, {"index", optional_index(element_nilpotency_index(g))}});
    }
    return {{"dim", ideal.dim()},
            {"index", index ? json(*index) : json(nullptr)},
            {"elements", elements}};
}

json support(const Signature& sig, const std::vector<Multivector>& gens) {
    const Ideal ideal = ideal_closure(sig, gens);
    const NullSupportSets sets = null_support_of_ideal(ideal);
    return {{"dim", ideal.dim()},
            {"canonical", sets.canonical},
            {"minimal", sets.minimal},
            {"witness", strings(finite_generating_witness(ideal))}};
}

std::string index_set(const json& list) {
    std::string out = "{";
    for (std::size_t i = 0; i < list.size(); ++i) out += (i ? ", e" : "e") + std::to_string(list[i].get<unsigned>());
    return out + "}";
}

std::string index_text(const json& n) { return n.is_null() ? "not nilpotent" : std::to_string(n.get<std::uint64_t>()); }

void basis_lines(std::ostringstream& os, const json& basis) {
    for (const auto& v : basis) os << "  " << v.get<std::string>() << '\n';
}

} // namespace

Report execute(const Command& cmd) {
    const auto start = std::chrono::steady_clock::now();
    const Signature& sig = cmd.signature.sig;
    Report report{verb_name(cmd.verb), sig, cmd.signature.relabel, nullptr, 0};
    switch (cmd.verb) {
    case Verb::SignatureInfo: report.result = signature_info(sig); break;
    case Verb::Eval: report.result = eval(sig, cmd.expression); break;
    case Verb::IdealClassify: report.result = classify(sig, require_gens(cmd)); break;
    case Verb::Primes: report.result = primes(sig); break;
    case Verb::Radical: report.result = radical(sig, cmd.seed); break;
    case Verb::Chains: report.result = chains(sig, cmd.k, cmd.ascending, cmd.descending); break;
    case Verb::Nilpotency: report.result = nilpotency(sig, require_gens(cmd)); break;
    case Verb::Support: report.result = support(sig, require_gens(cmd)); break;
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string render_text(const Report& report) {
    std::ostringstream os;
    const json& r = report.result;
    const std::string& c = report.command;
    if (c == "eval") {
        os << r.at("value").get<std::string>() << '\n';
        return os.str();
    }
    os << "signature " << report.signature.to_string();
    if (!report.relabel.empty()) {
        os << " relabel";
        for (std::size_t i = 0; i < report.relabel.size(); ++i) os << " e" << i << "->e" << report.relabel[i];
    }
    os << '\n';
    if (c == "signature-info") {
        os << "dimension " << r.at("dimension").get<std::uint64_t>() << '\n'
           << "C(p,q) is " << r.at("class").get<std::string>() << " ((p-q) mod 8 = " << r.at("residue").get<unsigned>()
           << ")\n"
           << "volume element " << r.at("volume_element").get<std::string>() << '\n';
        if (!r.at("idempotents").is_null()) {
            os << "central idempotents:\n";
            basis_lines(os, r.at("idempotents"));
        }
        os << "nil radical dimension " << r.at("radical_dim").get<std::uint64_t>() << '\n';
    } else if (c == "ideal classify") {
        os << "verdict " << r.at("verdict").get<std::string>() << '\n'
           << "dim " << r.at("dim").get<std::size_t>() << ", dim(I n R) " << r.at("radical_intersection_dim").get<std::size_t>()
           << '\n'
           << "basis:\n";
        basis_lines(os, r.at("basis"));
    } else if (c == "primes") {
        const json& list = r.at("primes");
        os << "C(p,q) is " << r.at("class").get<std::string>() << "; " << list.size()
           << (list.size() == 1 ? " prime ideal" : " prime ideals") << '\n';
        for (std::size_t i = 0; i < list.size(); ++i) {
            os << "P" << i + 1 << ": dim " << list[i].at("dim").get<std::size_t>() << '\n';
            basis_lines(os, list[i].at("basis"));
        }
    } else if (c == "radical") {
        os << "nil radical = Jacobson radical: " << (r.at("jacobson_equals_nil").get<bool>() ? "yes" : "no") << '\n'
           << "dim " << r.at("dim").get<std::size_t>() << '\n';
        for (const auto& g : r.at("grading")) {
            os << "R_" << g.at("grade").get<unsigned>() << ": dim " << g.at("dim").get<std::size_t>() << '\n';
        }
        os << "1 + x inverted exactly for " << r.at("quasi_regular_checked").get<unsigned>()
           << " random x (seed " << r.at("seed").get<std::uint64_t>() << ")\n"
           << "basis:\n";
        basis_lines(os, r.at("basis"));
    } else if (c == "chains") {
        for (const char* dir : {"descending", "ascending"}) {
            if (!r.contains(dir)) continue;
            os << dir << ':';
            for (const auto& link : r.at(dir)) {
                os << " (" << link.at("generators").get<std::string>() << ")=" << link.at("dim").get<std::size_t>();
            }
            os << '\n';
        }
    } else if (c == "nilpotency") {
        os << "ideal dim " << r.at("dim").get<std::size_t>() << ", nilpotency index " << index_text(r.at("index"))
           << '\n';
        for (const auto& e : r.at("elements")) {
            os << "  " << e.at("element").get<std::string>() << ": " << index_text(e.at("index")) << '\n';
        }
    } else if (c == "support") {
        os << "ideal dim " << r.at("dim").get<std::size_t>() << '\n'
           << "canonical support " << index_set(r.at("canonical")) << '\n'
           << "minimal support " << index_set(r.at("minimal")) << '\n'
           << "generating witness:\n";
        basis_lines(os, r.at("witness"));
    }
    return os.str();
}

Outcome run(const std::vector<std::string>& args) {
    Outcome outcome;
    Command cmd;
    try {
        cmd = parse_command(args);
    } catch (const CLI::CallForHelp&) {
        outcome.out = "usage: cliffideal -s <p,q,z|roles> [--json] [--seed N] <verb> ...\n"
                      "verbs: signature-info, eval <expr>, ideal classify --gens <e;...>, primes, radical,\n"
                      "       chains --k <n> [--ascending|--descending], nilpotency --gens <e;...>,\n"
                      "       support --gens <e;...>\n";
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = 2;
        outcome.err = std::string("usage error: ") + e.what() + "\n";
        return outcome;
    } catch (const std::exception& e) {
        outcome.exit_code = 2;
        outcome.err = std::string("usage error: ") + e.what() + "\n";
        return outcome;
    }
    try {
        const Report report = execute(cmd);
        outcome.out = cmd.json ? to_json(report).dump(2) + "\n" : render_text(report);
    } catch (const InternalContradiction& e) {
        outcome.exit_code = 3;
        outcome.err = std::string("internal contradiction: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        outcome.exit_code = 1;
        outcome.err = std::string("error: ") + e.what() + "\n";
    }
    return outcome;
}

} // namespace clifford::cli
