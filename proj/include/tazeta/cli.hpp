#pragma once

// Command implementations behind the tazeta executable. Each command writes
// results to `out`, progress and diagnostics to `err`, and returns the exit
// status.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tazeta.hpp"

namespace tazeta::cli {

enum Exit { ok = 0, fail = 1, input_error = 2, unsupported = 3 };

enum class Format { tsv, json };

enum class SourceKind { drt, conference, fusion, file };

/// Where the algebra comes from, plus the resolved table.
struct FamilySpec {
    SourceKind kind = SourceKind::file;
    long u = 0;
    std::string name;  // fusion ring name or file path
    TableAlgebra algebra;

    std::string label() const {
        switch (kind) {
            case SourceKind::drt: return "drt(u=" + std::to_string(u) + ")";
            case SourceKind::conference: return "conference(u=" + std::to_string(u) + ")";
            case SourceKind::fusion: return "fusion(" + name + ")";
            case SourceKind::file: return name;
        }
        return name;
    }

    std::optional<BigInt> order() const {
        if (kind == SourceKind::drt) return drt_order(u);
        if (kind == SourceKind::conference) return conference_order(u);
        return std::nullopt;
    }
};

struct SourceArgs {
    std::string family;  // drt | conference | fusion, empty when a file is given
    std::optional<long> u;
    std::string name;
    std::string file;
};

/// Builds the algebra without validating it (validate reports violations
/// itself; the other commands go through `checked`).
inline FamilySpec resolve_source(const SourceArgs& a) {
    FamilySpec s;
    if (!a.file.empty()) {
        if (!a.family.empty()) throw Error(Errc::invalid_argument, "give either --file or --family, not both");
        s.kind = SourceKind::file;
        s.name = a.file;
        s.algebra = load_algebra(a.file);
        return s;
    }
    if (a.family == "drt" || a.family == "conference") {
        if (!a.u) throw Error(Errc::invalid_argument, "--family " + a.family + " needs --u");
        s.kind = a.family == "drt" ? SourceKind::drt : SourceKind::conference;
        s.u = *a.u;
        s.algebra = s.kind == SourceKind::drt ? drt_algebra(s.u) : conference_algebra(s.u);
        return s;
    }
    if (a.family == "fusion") {
        if (a.name.empty()) throw Error(Errc::invalid_argument, "--family fusion needs --name");
        s.kind = SourceKind::fusion;
        s.name = a.name;
        s.algebra = fusion_algebra(a.name);
        return s;
    }
    if (a.family.empty()) throw Error(Errc::invalid_argument, "no algebra given: use --family or --file");
    throw Error(Errc::invalid_argument, "unknown family '" + a.family + "' (expected drt, conference or fusion)");
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::tsv;
    int threads = 0;
    bool quiet = false;

    OracleOptions oracle() const {
        OracleOptions o;
        o.threads = threads;
        if (!quiet) o.progress = [this](const std::string& m) { err << m << "\n"; };
        return o;
    }
    void note(const std::string& m) const {
        if (!quiet) err << m << "\n";
    }
};

namespace detail {

inline nlohmann::json jint(const BigInt& v) {
    if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline std::string join(const std::vector<BigInt>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].str();
    return s;
}

inline std::string rational_vector(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + "]";
}

inline std::string local_text(const LocalRationalFunction& f) {
    return "(" + f.numerator.to_string("t") + ") / (" + f.denominator.to_string("t") + ")";
}

inline int floor_log(const BigInt& p, int n) {
    int k = 0;
    for (BigInt q = p; q <= n; q *= p) ++k;
    return k;
}

/// Closed-form local factors at bad primes, where one is known.
inline std::map<BigInt, LocalRationalFunction> known_factors(const FamilySpec& s, const RationalDecomposition& d) {
    if (s.kind == SourceKind::fusion) return fusion_exceptional_factors(s.name, d);
    if (auto n = s.order()) return rank3_exceptional_factors(*n);
    return {};
}

struct PrimeInference {
    BigInt p;
    int kmax = 0;
    std::vector<BigInt> counts;
    InferredPolynomial inferred;
    LocalRationalFunction maximal;
};

/// Oracle counts at p, deepening until delta_p stabilizes or the enumeration
/// budget runs out.
inline PrimeInference infer_at_prime(const TableAlgebra& t, const RationalDecomposition& d, const BigInt& p, int min_k,
                                     const Context& ctx, const BigInt& budget) {
    PrimeInference r;
    r.p = p;
    r.maximal = maximal_local_factor(d, p);
    int k = std::max(min_k, 3);
    while (true) {
        ctx.note("p=" + p.str() + ": counting ideals up to p^" + std::to_string(k));
        r.kmax = k;
        r.counts = count_ideals_at_prime(t, p, k, ctx.oracle());
        r.inferred = infer_local_polynomial(r.counts, r.maximal);
        if (r.inferred.stabilized) break;
        if (prime_power_workload(t.rank(), p, k + 1) > budget) break;
        ++k;
    }
    return r;
}

inline const BigInt& default_budget() {
    static const BigInt b(50000000);
    return b;
}

}  // namespace detail

inline int cmd_validate(const FamilySpec& s, const Context& ctx) {
    const TableAlgebra& t = s.algebra;
    ValidationReport rep = validate(t);
    if (ctx.format == Format::json) {
        nlohmann::json j;
        j["source"] = s.label();
        j["rank"] = t.rank();
        j["valid"] = rep.ok();
        if (auto n = s.order()) j["n"] = detail::jint(*n);
        auto v = nlohmann::json::array();
        for (auto& x : rep.violations) v.push_back({{"axiom", axiom_name(x.axiom)}, {"detail", x.detail}});
        j["violations"] = v;
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << "source\t" << s.label() << "\n";
        ctx.out << "rank\t" << t.rank() << "\n";
        if (auto n = s.order()) ctx.out << "n\t" << n->str() << "\n";
        for (auto& x : rep.violations) ctx.out << "violation\t" << axiom_name(x.axiom) << "\t" << x.detail << "\n";
        ctx.out << (rep.ok() ? "valid" : "invalid") << "\n";
    }
    return rep.ok() ? ok : fail;
}

inline int cmd_decompose(const FamilySpec& s, const Context& ctx) {
    TableAlgebra t = checked(s.algebra);
    RationalDecomposition d = decompose(t);
    MaximalOrder mo = maximal_order(t, d);
    const auto& names = t.names();
    if (ctx.format == Format::json) {
        nlohmann::json j;
        j["source"] = s.label();
        j["generator"] = names[static_cast<std::size_t>(d.generator_index)];
        j["minpoly"] = d.minpoly.to_string("x");
        auto comps = nlohmann::json::array();
        for (std::size_t c = 0; c < d.factors.size(); ++c)
            comps.push_back({{"factor", d.factors[c].to_string("x")},
                             {"ring", d.component_rings[c].defining_poly.to_string("x")},
                             {"discriminant", detail::jint(d.component_rings[c].discriminant)},
                             {"idempotent", detail::rational_vector(d.idempotents[c])}});
        j["components"] = comps;
        j["maximal_order"] = mo.basis.to_string();
        j["index"] = detail::jint(mo.index);
        j["conductor"] = detail::jint(mo.conductor);
        auto bp = nlohmann::json::array();
        for (auto& p : mo.bad_primes) bp.push_back(detail::jint(p));
        j["bad_primes"] = bp;
        ctx.out << j.dump(2) << "\n";
        return ok;
    }
    ctx.out << "source\t" << s.label() << "\n";
    ctx.out << "generator\t" << names[static_cast<std::size_t>(d.generator_index)] << "\n";
    ctx.out << "minpoly\t" << d.minpoly.to_string("x") << "\n";
    for (std::size_t c = 0; c < d.factors.size(); ++c) {
        ctx.out << "factor\t" << c << "\t" << d.factors[c].to_string("x") << "\n";
        ctx.out << "ring\t" << c << "\t" << d.component_rings[c].defining_poly.to_string("x") << "\tdisc " << d.component_rings[c].discriminant.str()
                << "\n";
        ctx.out << "idempotent\t" << c << "\t" << detail::rational_vector(d.idempotents[c]) << "\n";
    }
    ctx.out << "maximal_order\t" << mo.basis.to_string() << "\n";
    ctx.out << "index\t" << mo.index.str() << "\n";
    ctx.out << "conductor\t" << mo.conductor.str() << "\n";
    ctx.out << "bad_primes\t" << (mo.bad_primes.empty() ? "none" : detail::join(mo.bad_primes, " ")) << "\n";
    return ok;
}

struct CountArgs {
    std::optional<int> max_index;
    std::optional<BigInt> prime;
    std::optional<int> kmax;
};

inline int cmd_count(const FamilySpec& s, const CountArgs& a, const Context& ctx) {
    TableAlgebra t = checked(s.algebra);
    if (a.prime) {
        if (!a.kmax) throw Error(Errc::invalid_argument, "--prime needs --kmax");
        if (a.max_index) throw Error(Errc::invalid_argument, "give either --max-index or --prime, not both");
        if (!is_prime(static_cast<std::uint64_t>(*a.prime))) throw Error(Errc::invalid_argument, a.prime->str() + " is not prime");
        auto c = count_ideals_at_prime(t, *a.prime, *a.kmax, ctx.oracle());
        if (ctx.format == Format::json) {
            nlohmann::json j{{"source", s.label()}, {"prime", detail::jint(*a.prime)}};
            auto arr = nlohmann::json::array();
            for (auto& x : c) arr.push_back(detail::jint(x));
            j["counts"] = arr;
            ctx.out << j.dump(2) << "\n";
        } else {
            for (std::size_t k = 0; k < c.size(); ++k) ctx.out << a.prime->str() << "^" << k << "\t" << c[k].str() << "\n";
        }
        return ok;
    }
    if (!a.max_index) throw Error(Errc::invalid_argument, "count needs --max-index or --prime with --kmax");
    DirichletSeries sr = count_ideals(t, *a.max_index, ctx.oracle());
    if (ctx.format == Format::json) {
        nlohmann::json j{{"source", s.label()}};
        auto arr = nlohmann::json::array();
        for (int n = 1; n <= sr.bound(); ++n) arr.push_back(detail::jint(sr[n]));
        j["a"] = arr;
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << series_tsv(sr);
    }
    return ok;
}

/// Assembled series: closed-form factors where known, otherwise delta_p is
/// inferred from the oracle.
inline int cmd_zeta(const FamilySpec& s, int bound, const Context& ctx) {
    TableAlgebra t = checked(s.algebra);
    RationalDecomposition d = decompose(t);
    MaximalOrder mo = maximal_order(t, d);
    auto factors = detail::known_factors(s, d);
    for (auto& p : mo.bad_primes) {
        if (factors.count(p)) continue;
        auto inf = detail::infer_at_prime(t, d, p, detail::floor_log(p, bound), ctx, detail::default_budget());
        if (!inf.inferred.stabilized)
            throw Error(Errc::precision_unstable, "local polynomial at p = " + p.str() + " did not stabilize within the enumeration budget");
        ctx.note("p=" + p.str() + ": inferred delta = " + inf.inferred.polynomial.to_string("t"));
        factors[p] = LocalRationalFunction{p, inf.inferred.polynomial, IntPoly(BigInt(1))} * inf.maximal;
    }
    DirichletSeries sr = assemble_global(d, mo.bad_primes, factors, bound);
    if (ctx.format == Format::json) {
        nlohmann::json j{{"source", s.label()}};
        nlohmann::json f = nlohmann::json::object();
        for (auto& [p, lf] : factors) f[p.str()] = detail::local_text(lf);
        j["exceptional_factors"] = f;
        auto arr = nlohmann::json::array();
        for (int n = 1; n <= sr.bound(); ++n) arr.push_back(detail::jint(sr[n]));
        j["a"] = arr;
        ctx.out << j.dump(2) << "\n";
    } else {
        for (auto& [p, lf] : factors) ctx.out << "# factor p=" << p.str() << "\t" << detail::local_text(lf) << "\n";
        ctx.out << series_tsv(sr);
    }
    return ok;
}

inline int cmd_verify(const FamilySpec& s, int bound, const Context& ctx, const BigInt& budget = detail::default_budget()) {
    TableAlgebra t = checked(s.algebra);
    RationalDecomposition d = decompose(t);
    MaximalOrder mo = maximal_order(t, d);
    auto known = detail::known_factors(s, d);
    std::map<BigInt, LocalRationalFunction> factors;
    bool pass = true;
    nlohmann::json jp = nlohmann::json::array();
    std::ostringstream tsv;

    for (auto& p : mo.bad_primes) {
        auto kf = known.find(p);
        int min_k = detail::floor_log(p, bound);
        auto inf = detail::infer_at_prime(t, d, p, min_k, ctx, budget);
        std::string delta = inf.inferred.polynomial.to_string("t");
        std::string status = "PASS", expected = "-", note;
        if (kf != known.end()) {
            const LocalRationalFunction& f = kf->second;
            int deep = f.numerator.degree() + f.denominator.degree() + 4;
            expected = infer_local_polynomial(f.expand(deep), inf.maximal).polynomial.to_string("t");
            if (f.expand(inf.kmax) != inf.counts) {
                status = "FAIL";
                note = "oracle counts differ from the closed form";
            } else if (inf.inferred.stabilized && !f.equivalent(LocalRationalFunction{p, inf.inferred.polynomial, IntPoly(BigInt(1))} * inf.maximal)) {
                status = "FAIL";
                note = "inferred polynomial differs from the closed form";
            }
            if (!inf.inferred.stabilized) delta = "(not stabilized by p^" + std::to_string(inf.kmax) + ")";
            factors[p] = f;
        } else {
            if (!inf.inferred.stabilized) {
                status = "FAIL";
                note = "did not stabilize by p^" + std::to_string(inf.kmax);
            }
            factors[p] = LocalRationalFunction{p, inf.inferred.polynomial, IntPoly(BigInt(1))} * inf.maximal;
        }
        if (status != "PASS") pass = false;
        tsv << "prime\t" << p.str() << "\tkmax " << inf.kmax << "\tdelta " << delta << "\texpected " << expected << "\t" << status
            << (note.empty() ? "" : "\t" + note) << "\n";
        jp.push_back({{"p", detail::jint(p)}, {"kmax", inf.kmax}, {"delta", delta}, {"expected", expected}, {"status", status}, {"note", note}});
    }

    ctx.note("global: counting ideals up to index " + std::to_string(bound));
    DirichletSeries oracle = count_ideals(t, bound, ctx.oracle());
    DirichletSeries assembled = assemble_global(d, mo.bad_primes, factors, bound);
    nlohmann::json jm = nlohmann::json::array();
    for (int n = 1; n <= bound; ++n) {
        if (oracle[n] == assembled[n]) continue;
        pass = false;
        tsv << "mismatch\t" << n << "\toracle " << oracle[n].str() << "\tassembled " << assembled[n].str() << "\n";
        jm.push_back({{"n", n}, {"oracle", detail::jint(oracle[n])}, {"assembled", detail::jint(assembled[n])}});
    }
    bool global_ok = jm.empty();
    tsv << "global\tN=" << bound << "\t" << (global_ok ? "PASS" : "FAIL") << "\n";
    tsv << (pass ? "PASS" : "FAIL") << "\n";

    if (ctx.format == Format::json) {
        nlohmann::json j{{"source", s.label()}, {"N", bound}, {"primes", jp}, {"mismatches", jm}, {"result", pass ? "PASS" : "FAIL"}};
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << "source\t" << s.label() << "\n" << tsv.str();
    }
    return pass ? ok : fail;
}

struct GenusArgs {
    std::optional<BigInt> prime;
    std::optional<int> m;
    std::optional<BigInt> v;
    bool symbolic = false;
};

namespace detail {

inline std::string power_text(int e) {
    if (e == 0) return "1";
    return e == 1 ? "p" : "p^" + std::to_string(e);
}

/// c * p^k when x has that shape at both reference primes with the same c.
inline std::string symbolic_entry(const BigInt& a, const BigInt& b) {
    if (a == 0 && b == 0) return "0";
    if (a == 0 || b == 0) return "?";
    int ka = valuation(a, BigInt(3)), kb = valuation(b, BigInt(5));
    if (ka == kb && a / ipow(BigInt(3), static_cast<unsigned>(ka)) == b / ipow(BigInt(5), static_cast<unsigned>(kb))) {
        BigInt c = a / ipow(BigInt(3), static_cast<unsigned>(ka));
        if (c == 1) return power_text(ka);
        return c.str() + (ka ? "*" + power_text(ka) : "");
    }
    return "?";
}

inline std::string lattice_rows(const LatticeHNF& l) {
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + l.matrix()(i, j).str();
        s += "]";
    }
    return s + "]";
}

inline std::string symbolic_rows(const LatticeHNF& a, const LatticeHNF& b) {
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + symbolic_entry(a.matrix()(i, j), b.matrix()(i, j));
        s += "]";
    }
    return s + "]";
}

}  // namespace detail

inline int cmd_genus(const std::optional<FamilySpec>& s, const GenusArgs& a, const Context& ctx) {
    LocalModel model;
    if (s) {
        if (s->kind != SourceKind::drt && s->kind != SourceKind::conference)
            throw Error(Errc::invalid_argument, "genus needs --family drt or --family conference");
        if (a.m || a.v) throw Error(Errc::invalid_argument, "--m and --v are implied by the family");
        BigInt n = *s->order();
        BigInt p;
        if (a.prime) {
            p = *a.prime;
        } else {
            for (auto& [q, e] : factorize(n))
                if (q != 2 && e % 2 == 1) {
                    p = q;
                    break;
                }
            if (p == 0) throw Error(Errc::unsupported_case, "n = " + n.str() + " has no odd prime with odd valuation");
        }
        Rank3Family fam = s->kind == SourceKind::drt ? Rank3Family::drt : Rank3Family::conference;
        model = local_model(fam, s->u, p);
    } else {
        if (!a.m) throw Error(Errc::invalid_argument, "genus needs a family or --m");
        if (!a.symbolic && !a.prime) throw Error(Errc::invalid_argument, "genus --m needs --prime or --symbolic-p");
        model = LocalModel(a.prime.value_or(BigInt(3)), *a.m, a.v.value_or(BigInt(1)));
    }

    ctx.note("genus: m=" + std::to_string(model.m) + (a.symbolic ? ", symbolic p" : ", p=" + model.p.str() + ", v=" + model.v.str()));
    GenusReport rep = a.symbolic ? symbolic_genus_report(model.m) : genus_report(model);
    std::vector<std::string> complements;
    if (a.symbolic) {
        GenusReport r3 = genus_report(LocalModel(BigInt(3), model.m, BigInt(1)));
        GenusReport r5 = genus_report(LocalModel(BigInt(5), model.m, BigInt(1)));
        for (std::size_t e = 0; e < r3.entries.size(); ++e)
            complements.push_back(detail::symbolic_rows(r3.entries[e].complement, r5.entries[e].complement));
    } else {
        for (auto& e : rep.entries) complements.push_back(detail::lattice_rows(e.complement));
    }

    auto idx = [&](int c) { return a.symbolic ? detail::power_text(c) : ipow(model.p, static_cast<unsigned>(c)).str(); };
    auto mu = [&](const IntPoly& f) { return a.symbolic ? PExpr(to_rational(f), RatPoly(Rational(1))).to_string() : f.eval(model.p).str(); };
    auto fn = [&](const SymbolicRationalFunction& f) { return a.symbolic ? f.to_string() : detail::local_text(f.at(model.p)); };

    if (ctx.format == Format::json) {
        nlohmann::json j;
        j["m"] = model.m;
        if (!a.symbolic) {
            j["p"] = detail::jint(model.p);
            j["v"] = detail::jint(model.v);
        }
        auto arr = nlohmann::json::array();
        for (std::size_t e = 0; e < rep.entries.size(); ++e) {
            auto& g = rep.entries[e];
            arr.push_back({{"lattice", g.lattice.name()}, {"index", idx(g.index_exponent)}, {"mu_inv", mu(g.mu_inv)}, {"zeta", fn(g.zeta)},
                           {"complement", complements[e]}});
        }
        j["genera"] = arr;
        j["total"] = fn(rep.total);
        ctx.out << j.dump(2) << "\n";
        return ok;
    }
    if (a.symbolic)
        ctx.out << "# m=" << model.m << " symbolic p; complements shown for v = 1\n";
    else
        ctx.out << "# m=" << model.m << " p=" << model.p.str() << " v=" << model.v.str() << "\n";
    for (auto& g : rep.entries) ctx.out << g.lattice.name() << "\t" << idx(g.index_exponent) << "\t" << mu(g.mu_inv) << "\t" << fn(g.zeta) << "\n";
    for (std::size_t e = 0; e < rep.entries.size(); ++e)
        ctx.out << "complement\t" << rep.entries[e].lattice.name() << "\t" << complements[e] << "\n";
    ctx.out << "total\t" << fn(rep.total) << "\n";
    return ok;
}

/// Maps an exception to an exit status, reporting it on `err`.
inline int report_error(const std::exception& e, std::ostream& err) {
    if (auto* te = dynamic_cast<const Error*>(&e)) {
        err << "error: " << te->what() << "\n";
        return te->is_unsupported() ? unsupported : input_error;
    }
    err << "error: " << e.what() << "\n";
    return input_error;
}

}  // namespace tazeta::cli
