#include "cce/golden.hpp"
#include "cce/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace cce;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string family;
    int rank = 0;
    std::optional<int> max_degree;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out;
    std::string cartan_basis = "coroot";
    bool compare_paper = false;
    bool exhaustive = false;
    bool full = false;
    int jacobi_samples = 200;

    AlgebraType type() const
    {
        try {
            return AlgebraType::parse(family, rank);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }

    CartanBasis basis() const
    {
        return cartan_basis == "orthonormal" ? CartanBasis::Orthonormal : CartanBasis::Coroot;
    }
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + cfg.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? sep : "") + parts[i];
    return s;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string degree_word(int d)
{
    static const char* words[] = {"abelian", "linear", "quadratic", "cubic", "quartic", "quintic", "sextic", "septic"};
    return d < 8 ? words[d] : "degree " + std::to_string(d);
}

struct Closed {
    LieAlgebra g;
    GeneratorCatalog cat;
    GeneratorSet gs;
    Closed(const RunConfig& cfg, bool allow_truncation = false)
        : g(build_algebra(cfg.type(), cfg.basis())), cat(make_catalog(g, cfg, allow_truncation)), gs(g, cat)
    {
    }

    static GeneratorCatalog make_catalog(const LieAlgebra& g, const RunConfig& cfg, bool allow_truncation)
    {
        CatalogOptions opt;
        opt.max_degree = cfg.max_degree;
        opt.exhaustive = cfg.exhaustive;
        if (opt.max_degree && !allow_truncation)
            throw UsageError("--max-degree is only supported by the generators command");
        if (opt.max_degree && *opt.max_degree < 2)
            throw UsageError("--max-degree must be at least 2");
        return build_catalog(g.roots, opt);
    }
};

int cmd_roots(const RunConfig& cfg)
{
    LieAlgebra g = build_algebra(cfg.type(), cfg.basis());
    const RootSystem& rs = g.roots;
    if (cfg.format == "json") {
        emit(cfg, dump(roots_json(g)));
        return 0;
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "index,basis,root,height";
        for (int i = 0; i < g.rank(); ++i)
            os << ",w" << i + 1;
        os << "\n";
        for (int r = 0; r < rs.size(); ++r) {
            os << r << "," << coordinate_name(g, g.root_to_basis(r)) << "," << csv_field(root_string(rs.roots[r]))
               << "," << rs.height[r];
            for (int i = 0; i < g.rank(); ++i)
                os << "," << rs.weights[i][r];
            os << "\n";
        }
        emit(cfg, os.str());
        return 0;
    }
    os << g.type.name() << ": dim " << g.dim() << ", rank " << g.rank() << ", " << rs.positive_count()
       << " positive roots\n";
    os << "simple roots:";
    for (const auto& v : rs.simple)
        os << " " << root_string(v);
    os << "\ncartan matrix:\n";
    for (const auto& row : rs.cartan_matrix) {
        os << " ";
        for (int v : row)
            os << " " << std::setw(2) << v;
        os << "\n";
    }
    os << "positive roots (height, weights on H_1..H_" << g.rank() << "):\n";
    for (int r = 0; r < rs.positive_count(); ++r) {
        os << "  " << std::left << std::setw(6) << coordinate_name(g, g.root_to_basis(r)) << std::right << " "
           << root_string(rs.roots[r]) << "  height " << rs.height[r] << "  weights";
        for (int i = 0; i < g.rank(); ++i)
            os << " " << rs.weights[i][r];
        os << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

std::string layer_line(int rank, const std::map<int, std::size_t>& counts, std::size_t total)
{
    std::vector<std::string> parts{std::to_string(rank)};
    for (const auto& [h, n] : counts)
        parts.push_back(std::to_string(n));
    return "layers " + join(parts, ",") + " total " + std::to_string(total);
}

int cmd_generators(const RunConfig& cfg)
{
    Closed s(cfg, true);
    const auto& cat = s.cat;
    std::map<int, std::size_t> counts;
    for (const auto& [h, l] : cat.layers)
        counts[h] = l.size();
    std::ostringstream os;
    int rc = 0;
    if (cfg.format == "json") {
        os << dump(catalog_json(s.gs));
    } else if (cfg.format == "csv") {
        os << "id,degree,name,roots\n";
        for (int id = 0; id < s.gs.size(); ++id) {
            const auto& gen = s.gs.at(id);
            std::vector<std::string> roots;
            for (int r : gen.roots)
                roots.push_back(root_string(s.g.roots.roots[r]));
            os << id << "," << gen.degree << "," << csv_field(gen.name) << "," << csv_field(join(roots, " ")) << "\n";
        }
    } else {
        os << cat.type.name() << ": " << layer_line(cat.rank, counts, cat.total()) << ", zeta " << cat.zeta
           << (cat.truncated ? " (truncated)" : "") << "\n";
        for (int id = 0; id < s.gs.size(); ++id)
            os << "  [" << s.gs.at(id).degree << "] " << s.gs.at(id).name << "\n";
        if (cat.layers.size() == 1 && cat.layers.begin()->first == 2 && !cat.truncated) {
            const auto& q = cat.layers.begin()->second;
            bool abelian = true;
            for (std::size_t a = 0; a < q.size() && abelian; ++a)
                for (std::size_t b = a + 1; b < q.size(); ++b)
                    if (!bracket_monomials(s.gs.at(cat.rank + a).monomial, s.gs.at(cat.rank + b).monomial, s.g.sc)
                             .is_zero())
                        abelian = false;
            if (abelian)
                os << "note: all generators are quadratic and Poisson-commute; the commutant is abelian\n";
        }
    }
    if (cfg.compare_paper) {
        auto golden = golden::layer_counts(cat.type);
        auto total = golden::total(cat.type);
        if (!golden || !total)
            throw UsageError("no reference layer table for " + cat.type.name());
        std::map<int, std::size_t> want(golden->begin(), golden->end());
        bool match = want == counts && static_cast<std::size_t>(*total) == cat.total() && !cat.truncated;
        std::ostringstream cmp;
        cmp << layer_line(cat.rank, counts, cat.total()) << ": " << (match ? "MATCH" : "MISMATCH") << "\n";
        if (!match) {
            cmp << "expected: " << layer_line(cat.rank, want, *total) << "\n";
            std::set<int> degrees;
            for (const auto& [h, n] : counts)
                degrees.insert(h);
            for (const auto& [h, n] : want)
                degrees.insert(h);
            for (int h : degrees) {
                std::size_t got = counts.count(h) ? counts.at(h) : 0, exp = want.count(h) ? want.at(h) : 0;
                if (got != exp)
                    cmp << "  degree " << h << ": computed " << got << ", expected " << exp << "\n";
            }
            rc = 1;
        }
        if (cfg.format == "text")
            os << cmp.str();
        else
            std::cerr << cmp.str();
    }
    emit(cfg, os.str());
    return rc;
}

int cmd_close(const RunConfig& cfg)
{
    Closed s(cfg);
    BracketTable t = close_catalog(s.gs);
    JacobiReport jac = s.gs.size() <= 30 ? jacobi_spot_check(t, s.gs, -1, cfg.seed)
                                         : jacobi_spot_check(t, s.gs, cfg.jacobi_samples, cfg.seed);
    if (!verify_hat_symmetry(t, s.gs))
        throw VerificationFailure("bracket table is not symmetric under the hat involution");
    std::ostringstream os;
    if (cfg.format == "json") {
        Json j = brackets_json(t, s.gs);
        j["jacobi_triples"] = jac.triples.size();
        os << dump(j);
    } else if (cfg.format == "csv") {
        os << "a,b,bracket,noncartan_factors,all_factors\n";
        for (const auto& e : t.entries)
            os << csv_field(s.gs.at(e.a).name) << "," << csv_field(s.gs.at(e.b).name) << ","
               << csv_field(expression_to_string(e.expr, s.gs)) << "," << e.noncartan_factors << "," << e.all_factors
               << "\n";
    } else {
        os << t.type.name() << ": " << s.gs.size() << " generators, " << t.entries.size()
           << " brackets closed with zero remainder\n";
        os << "degree d = " << t.degree << " (" << degree_word(t.degree) << ")\n";
        os << "degree counting Cartan factors = " << t.degree_all << "\n";
        os << "maximal factor count over all factorizations = " << t.degree_exhaustive << "\n";
        os << "Jacobi identity: " << jac.triples.size() << (s.gs.size() <= 30 ? " triples (exhaustive)" : " random triples")
           << " vanish\n";
        os << "hat symmetry: holds\n";
        if (cfg.full)
            for (const auto& e : t.entries)
                if (!e.expr.empty())
                    os << "{" << s.gs.at(e.a).name << ", " << s.gs.at(e.b).name
                       << "} = " << expression_to_string(e.expr, s.gs) << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_certify(const RunConfig& cfg)
{
    Closed s(cfg);
    std::vector<Integral> integrals;
    if (s.g.type == AlgebraType{Family::D, 3}) {
        for (const auto& n : golden::d3_independent_set())
            integrals.push_back({n, named_product(s.gs, {n})});
    } else {
        for (int id = 0; id < s.gs.size(); ++id)
            integrals.push_back({s.gs.at(id).name, s.gs.polynomial(id)});
    }
    Polynomial H = cartan_hamiltonian(s.g, cfg.seed);
    Certificate c = certify_system(H, integrals, s.g, cfg.seed);
    Json j = certificate_json(c);
    std::string path = cfg.out.empty() ? "certificate.json" : cfg.out;
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + path);
    f << dump(j);
    if (cfg.format == "json") {
        std::cout << dump(j);
    } else if (cfg.format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [k, v] : j.items())
            if (!v.is_array())
                std::cout << k << "," << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        std::cout << s.g.type.name() << ": H = " << c.hamiltonian << "\n";
        std::cout << c.integrals.size() << " integrals, all Poisson-commuting with H\n";
        std::cout << "rank " << c.rank << " (excluding H: " << c.rank_excluding_hamiltonian << "), bound " << c.bound
                  << "\n";
        std::cout << "r = " << c.r << " independent integrals besides H, r <= " << c.r_bound << ": "
                  << (c.bound_ok ? "ok" : "VIOLATED") << "\n";
        std::cout << "integrals mutually commuting: " << (c.mutually_commuting ? "yes (integrable)" : "no") << "\n";
        std::cout << "certificate written to " << path << "\n";
    }
    return c.bound_ok ? 0 : 1;
}

int cmd_quantize(const RunConfig& cfg)
{
    AlgebraType type = cfg.type();
    if (type.rank > 3)
        throw UsageError("quantize is limited to rank <= 3");
    Closed s(cfg);
    PBWAlgebra u(s.g.sc);
    const int n = s.gs.size(), rank = s.g.rank();
    std::vector<PBWElement> sym(n);
    for (int id = 0; id < n; ++id)
        sym[id] = u.symmetrize(s.gs.polynomial(id));
    std::vector<std::string> failures;
    for (int id = rank; id < n; ++id)
        for (int i = 0; i < rank; ++i)
            if (!u.commutator(u.generator(i), sym[id]).is_zero())
                failures.push_back(s.gs.at(id).name);
    PBWElement casimir = u.symmetrize(quadratic_casimir(s.g.sc));
    bool casimir_central = true;
    for (int b = 0; b < s.g.dim(); ++b)
        if (!u.commutator(u.generator(b), casimir).is_zero())
            casimir_central = false;
    std::map<int, int> profile;
    Json pairs = Json::array();
    bool filtration_ok = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int k = s.gs.at(a).degree, l = s.gs.at(b).degree;
            Polynomial classical = bracket_monomials(s.gs.at(a).monomial, s.gs.at(b).monomial, s.g.sc);
            int d = (u.commutator(sym[a], sym[b]) - u.symmetrize(classical)).degree();
            int drop = d < 0 ? -1 : k + l - 1 - d;
            if (d >= 0 && drop < 1)
                filtration_ok = false;
            ++profile[drop];
            if (d >= 0)
                pairs.push_back({{"a", s.gs.at(a).name}, {"b", s.gs.at(b).name}, {"correction_degree", d}});
        }
    std::ostringstream os;
    if (cfg.format == "json") {
        Json j;
        j["type"] = type.name();
        j["noncartan_generators"] = n - rank;
        j["cartan_commutators"] = failures.empty() ? "all-zero" : "nonzero";
        j["casimir_central"] = casimir_central;
        Json prof = Json::object();
        for (const auto& [drop, count] : profile)
            prof[drop < 0 ? "exact" : "drop " + std::to_string(drop)] = count;
        j["profile"] = prof;
        j["pairs"] = pairs;
        os << dump(j);
    } else if (cfg.format == "csv") {
        os << "a,b,correction_degree\n";
        for (const auto& p : pairs)
            os << csv_field(p["a"].get<std::string>()) << "," << csv_field(p["b"].get<std::string>()) << ","
               << p["correction_degree"].get<int>() << "\n";
    } else {
        std::vector<std::string> hs;
        for (int i = 0; i < rank; ++i)
            hs.push_back("H_" + std::to_string(i + 1));
        if (failures.empty())
            os << "all " << n - rank << " non-Cartan generators commute with " << join(hs, ",") << "\n";
        else
            os << "generators failing to commute with the Cartan subalgebra: " << join(failures, " ") << "\n";
        os << "symmetrized quadratic Casimir is " << (casimir_central ? "central" : "NOT central") << "\n";
        os << "[L(p),L(q)] - L({p,q}) profile over " << n * (n - 1) / 2 << " pairs:\n";
        for (const auto& [drop, count] : profile)
            os << "  " << (drop < 0 ? std::string("exact") : "down " + std::to_string(drop)) << ": " << count
               << " pairs\n";
    }
    emit(cfg, os.str());
    return failures.empty() && casimir_central && filtration_ok ? 0 : 1;
}

struct EmbeddingCase {
    AlgebraType sub, sup;
};

int cmd_embed(const RunConfig& cfg, const std::vector<std::string>& args)
{
    std::vector<EmbeddingCase> cases;
    if (args.empty()) {
        cases = {{{Family::A, 2}, {Family::A, 3}},
                 {{Family::A, 2}, {Family::D, 3}},
                 {{Family::D, 3}, {Family::B, 3}},
                 {{Family::A, 2}, {Family::C, 3}}};
    } else if (args.size() == 4) {
        try {
            cases.push_back({AlgebraType::parse(args[0], std::stoi(args[1])), AlgebraType::parse(args[2], std::stoi(args[3]))});
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("embed takes no arguments or SUB_FAMILY SUB_RANK SUP_FAMILY SUP_RANK");
    }
    Json out = Json::array();
    std::ostringstream os;
    bool all_ok = true;
    for (const auto& c : cases) {
        RunConfig a = cfg, b = cfg;
        a.family = std::string(1, family_letter(c.sub.family));
        a.rank = c.sub.rank;
        b.family = std::string(1, family_letter(c.sup.family));
        b.rank = c.sup.rank;
        Closed sa(a), sb(b);
        EmbeddingReport rep;
        try {
            rep = verify_embedding(sa.gs, sb.gs, RootInjection::padding(c.sub.ambient(), c.sup.ambient()));
        } catch (const std::invalid_argument& e) {
            rep.failures.push_back(e.what());
        }
        all_ok = all_ok && rep.ok();
        out.push_back({{"sub", c.sub.name()},
                       {"sup", c.sup.name()},
                       {"roots", rep.roots_ok},
                       {"generators", rep.generators_ok},
                       {"brackets", rep.brackets_ok},
                       {"failures", rep.failures}});
        os << c.sub.name() << " -> " << c.sup.name() << ": " << (rep.ok() ? "ok" : "FAILED");
        if (!rep.ok())
            os << " (" << join(rep.failures, "; ") << ")";
        os << "\n";
    }
    if (cfg.format == "json") {
        emit(cfg, dump(out));
    } else if (cfg.format == "csv") {
        std::ostringstream cs;
        cs << "sub,sup,roots,generators,brackets\n";
        for (const auto& r : out)
            cs << r["sub"].get<std::string>() << "," << r["sup"].get<std::string>() << "," << r["roots"] << ","
               << r["generators"] << "," << r["brackets"] << "\n";
        emit(cfg, cs.str());
    } else {
        emit(cfg, os.str());
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cartan commutant explorer"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::vector<std::string> embed_args;

    auto common = [&](CLI::App* sub, bool positional) {
        if (positional) {
            sub->add_option("family", cfg.family, "A, B, C or D")->required();
            sub->add_option("rank", cfg.rank, "rank n")->required();
        }
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out, "output file");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--cartan-basis", cfg.cartan_basis, "Cartan basis")
            ->check(CLI::IsMember({"coroot", "orthonormal"}));
    };

    auto* roots = app.add_subcommand("roots", "root system, Cartan matrix and weight table");
    common(roots, true);
    auto* gens = app.add_subcommand("generators", "layered catalog of indecomposable commutant generators");
    common(gens, true);
    gens->add_option("--max-degree", cfg.max_degree, "stop after this degree");
    gens->add_flag("--compare-paper", cfg.compare_paper, "compare layer counts with the embedded reference tables");
    gens->add_flag("--exhaustive", cfg.exhaustive, "scan every degree up to twice the number of positive roots");
    auto* close = app.add_subcommand("close", "close the catalog under the Poisson bracket");
    common(close, true);
    close->add_flag("--full", cfg.full, "print every nonzero bracket");
    close->add_option("--jacobi-samples", cfg.jacobi_samples, "random Jacobi triples for large catalogs");
    auto* certify = app.add_subcommand("certify", "superintegrability certificate");
    common(certify, true);
    auto* quantize = app.add_subcommand("quantize", "symmetrization into the enveloping algebra");
    common(quantize, true);
    auto* embed = app.add_subcommand("embed", "verify subalgebra embeddings");
    common(embed, false);
    embed->add_option("types", embed_args, "SUB_FAMILY SUB_RANK SUP_FAMILY SUP_RANK");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*roots)
            return cmd_roots(cfg);
        if (*gens)
            return cmd_generators(cfg);
        if (*close)
            return cmd_close(cfg);
        if (*certify)
            return cmd_certify(cfg);
        if (*quantize)
            return cmd_quantize(cfg);
        if (*embed)
            return cmd_embed(cfg, embed_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
