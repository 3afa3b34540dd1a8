#include "engellab/selftest.hpp"

#include <sstream>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "engellab/engel.hpp"
#include "engellab/files.hpp"

namespace engellab {

namespace {

std::vector<FieldSpec> field_portfolio() {
    return {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5)};
}

struct Ctx {
    SuiteResult* out;
    void check(bool cond, const std::string& what) {
        ++out->checks;
        if (!cond) out->failures.push_back(what);
    }
};

// ---- suite: catalog invariants -------------------------------------------

void suite_catalog(Ctx& c, bool inject_defect) {
    for (const FieldSpec& f : field_portfolio()) {
        for (const CatalogEntry& e : catalog(f)) {
            ExpectedInvariants want = e.expected;
            if (inject_defect && e.name == "A2" && f.is_rationals())
                want.lie = !want.lie; // deliberate corruption, see SelftestOptions
            AlgebraAnalysis a = analyze(e.algebra);
            std::string tag = e.name + " over " + f.str();
            c.check(a.lie == want.lie, tag + ": is_lie disagrees with the catalog");
            c.check(a.leib.dim() == want.leib_dim, tag + ": Leibniz kernel dimension off");
            c.check(a.nilpotent == want.nilpotency_class.has_value(),
                    tag + ": nilpotency verdict off");
            if (want.nilpotency_class)
                c.check(a.nilpotency_class == want.nilpotency_class,
                        tag + ": nilpotency class off");
        }
    }
}

// ---- suite: validation rejects bad input ---------------------------------

void suite_rejects(Ctx& c) {
    for (const FieldSpec& f : field_portfolio()) {
        // e1 e1 = e1 violates the identity at (0,0,0): e1 vs 2 e1.
        StructureConstants bad(f, 1);
        bad.set(0, 0, 0, Scalar::one(f));
        bool threw = false;
        try {
            LeibnizAlgebra::validate(bad);
        } catch (const IdentityViolation& v) {
            threw = v.i == 0 && v.j == 0 && v.k == 0;
        }
        c.check(threw, "e1e1=e1 over " + f.str() + " must fail validation at (0,0,0)");

        // Corrupting one action entry of a valid representation must be
        // rejected, and both validation routes must agree on that.
        LeibnizAlgebra nf3 = catalog_entry(f, "NF3")->algebra;
        Representation reg = regular_bimodule(nf3);
        std::vector<Matrix> t = reg.t_mats(), s = reg.s_mats();
        t[0].set(0, 0, Scalar::one(f));
        threw = false;
        try {
            Representation::validate(nf3, t, s);
        } catch (const NotARepresentation&) {
            threw = true;
        }
        c.check(threw, "corrupted NF3 regular action over " + f.str() + " must be rejected");
        c.check(!satisfies_operator_axioms(nf3, t, s),
                "operator axioms must also reject the corrupted action over " + f.str());
    }
    for (const char* text : {"x", "1/0", "", "2/", "/3", "1.5"}) {
        bool threw = false;
        try {
            Scalar::parse(FieldSpec::rationals(), text);
        } catch (const ParseError&) {
            threw = true;
        }
        c.check(threw, std::string("scalar literal '") + text + "' must be rejected");
    }
    bool threw = false;
    try {
        parse_algebra_file(R"({"dim":2,"field":"Q","products":[[0,0,1,"1"],[0,0,1,"2"]]})");
    } catch (const ParseError&) {
        threw = true;
    }
    c.check(threw, "duplicate product entries must be rejected");
}

// ---- suite: kernel identities --------------------------------------------

void suite_kernel(Ctx& c, std::uint64_t seed, const FieldSpec& f, const InstanceSet& inst) {
    Lcg rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (const NamedAlgebra& na : inst.algebras) {
        const LeibnizAlgebra& alg = na.algebra;
        std::string tag = na.name + " over " + f.str();
        Subspace leib = leibniz_kernel(alg);
        c.check(is_lie(alg) == leib.is_zero(), tag + ": is_lie vs trivial Leibniz kernel");
        c.check(is_ideal(alg, leib), tag + ": Leibniz kernel must be an ideal");
        // Leib . L = 0: squares left-annihilate.
        bool kills = true;
        for (std::size_t r = 0; r < leib.dim(); ++r)
            for (std::size_t i = 0; i < alg.dim(); ++i)
                if (!is_zero_vec(multiply(alg, leib.basis().row(r),
                                          unit_vec(f, alg.dim(), i))))
                    kills = false;
        c.check(kills, tag + ": Leib . L must vanish");
        if (!leib.is_full())
            c.check(is_lie(quotient_algebra(alg, leib).algebra), tag + ": L/Leib must be Lie");
        if (alg.dim() > 0) {
            Vec x = random_vec(rng, f, alg.dim());
            Vec y = random_vec(rng, f, alg.dim());
            Vec x2 = multiply(alg, x, x);
            c.check(is_zero_vec(multiply(alg, x2, y)), tag + ": x^2 y must vanish");
            // x y^2 = (x + y^2)^2 - x^2, both sides expanded exactly.
            Vec y2 = multiply(alg, y, y);
            Vec lhs = multiply(alg, x, y2);
            Vec xy2 = add(x, y2);
            Vec rhs = sub(multiply(alg, xy2, xy2), x2);
            c.check(lhs == rhs, tag + ": polarization identity x y^2 = (x+y^2)^2 - x^2");
        }
    }
}

// ---- suite: algebra-level Engel ------------------------------------------

void suite_algebra_engel(Ctx& c, const FieldSpec& f, const InstanceSet& inst) {
    for (const NamedAlgebra& na : inst.algebras) {
        std::string tag = na.name + " over " + f.str();
        AlgebraAnalysis a = analyze(na.algebra);
        c.check(a.nilpotent == a.nilpotency_class.has_value(),
                tag + ": class must be present exactly for nilpotent algebras");
        c.check(a.series.front().is_full(), tag + ": series must start at L");
        for (std::size_t i = 1; i < a.series.size(); ++i)
            c.check(a.series[i - 1].contains(a.series[i]), tag + ": series must descend");
        if (na.algebra.dim() > 4) continue; // regular-bimodule validation cost
        AlgebraEngelReport r = check_engel_algebra(na.algebra);
        c.check(!r.theorem_violated, tag + ": flag verdict disagrees with the central series");
        c.check(r.certificate_found == a.nilpotent, tag + ": flag vs nilpotency");
        if (r.flag) {
            c.check(r.flag->chain.back().is_full(), tag + ": flag must end at L");
            Representation reg = regular_bimodule(na.algebra);
            bool tri = true;
            for (std::size_t i = 0; i < na.algebra.dim(); ++i)
                if (!is_strictly_block_lower(*r.flag, in_adapted_basis(*r.flag, reg.t(i))))
                    tri = false;
            c.check(tri, tag + ": left multiplications must be strictly lower in the flag basis");
        }
    }
}

// ---- suite: representation-level Engel -----------------------------------

void suite_rep_engel(Ctx& c, const FieldSpec& f, const InstanceSet& inst) {
    for (const NamedRep& nr : inst.reps) {
        const Representation& rep = nr.rep;
        std::string tag = nr.name + " over " + f.str();
        EngelReport r = engel_report(rep);
        c.check(!r.theorem_violated, tag + ": T-flag succeeded but the full flag stalled");
        if (r.t_nilpotent) {
            c.check(r.t_certificate.has_value(), tag + ": missing T certificate");
            c.check(r.flag.has_value(), tag + ": missing full certificate");
            for (std::size_t i = 0; i < rep.alg_dim(); ++i)
                c.check(is_nilpotent_matrix(rep.t(i)),
                        tag + ": basis operator T[" + std::to_string(i) + "] must be nilpotent");
            if (r.flag) {
                bool tri = true, chain_ok = true;
                const FlagCertificate& cert = *r.flag;
                for (std::size_t i = 0; i < rep.alg_dim(); ++i) {
                    if (!is_strictly_block_lower(cert, in_adapted_basis(cert, rep.t(i)))) tri = false;
                    if (!is_strictly_block_lower(cert, in_adapted_basis(cert, rep.s(i)))) tri = false;
                    for (std::size_t k = 0; k + 1 < cert.chain.size(); ++k)
                        for (std::size_t rr = 0; rr < cert.chain[k + 1].dim(); ++rr) {
                            Vec v = cert.chain[k + 1].basis().row(rr);
                            if (!cert.chain[k].contains(rep.t(i).apply(v)) ||
                                !cert.chain[k].contains(rep.s(i).apply(v)))
                                chain_ok = false;
                        }
                }
                c.check(tri, tag + ": operators must be strictly lower in the adapted basis");
                c.check(chain_ok, tag + ": chain containment T_a W_{k+1} <= W_k");
            }
            if (rep.mod_dim() > 0) {
                c.check(r.witness.has_value(), tag + ": missing Engel witness");
                if (r.witness) {
                    bool killed = !is_zero_vec(*r.witness);
                    for (std::size_t i = 0; i < rep.alg_dim(); ++i) {
                        if (!is_zero_vec(rep.t(i).apply(*r.witness))) killed = false;
                        if (!is_zero_vec(rep.s(i).apply(*r.witness))) killed = false;
                    }
                    c.check(killed, tag + ": witness must be nonzero and killed by all actions");
                }
            }
        } else {
            c.check(r.failure_point.has_value(), tag + ": stall must carry a failure point");
            if (f.is_prime_field() && rep.alg_dim() > 0 && rep.alg_dim() <= 3) {
                // Exhaustive witness hunt: some T_a must be non-nilpotent.
                const long p = f.characteristic();
                std::size_t count = 1;
                for (std::size_t i = 0; i < rep.alg_dim(); ++i) count *= p;
                bool found = false;
                for (std::size_t code = 0; code < count && !found; ++code) {
                    std::size_t x = code;
                    Vec a = zero_vec(f, rep.alg_dim());
                    for (std::size_t i = 0; i < rep.alg_dim(); ++i) {
                        a[i] = Scalar::of_int(f, static_cast<long>(x % p));
                        x /= p;
                    }
                    if (!is_nilpotent_matrix(rep.t_of(a))) found = true;
                }
                c.check(found, tag + ": stall claims a non-nilpotent T_a but none exists");
            }
        }
    }
}

// ---- suite: file round trips ----------------------------------------------

void suite_roundtrip(Ctx& c, const FieldSpec& f, const InstanceSet& inst) {
    for (const NamedAlgebra& na : inst.algebras) {
        AlgebraFile back = parse_algebra_file(serialize_algebra_file(na.algebra));
        c.check(back.field == na.algebra.field() &&
                    back.constants == na.algebra.constants(),
                na.name + " over " + f.str() + ": algebra file round trip");
    }
    for (const NamedRep& nr : inst.reps) {
        RepFile back = parse_rep_file(serialize_rep_file(nr.rep), f, nr.rep.alg_dim());
        c.check(back.mod_dim == nr.rep.mod_dim() && back.t == nr.rep.t_mats() &&
                    back.s == nr.rep.s_mats(),
                nr.name + " over " + f.str() + ": representation file round trip");
    }
}

// ---- suite: split extension / ideal inverse -------------------------------

void suite_extension(Ctx& c, const FieldSpec& f, const InstanceSet& inst) {
    for (const NamedRep& nr : inst.reps) {
        const Representation& rep = nr.rep;
        if (rep.mod_dim() == 0) continue;
        std::string tag = nr.name + " over " + f.str();
        LeibnizAlgebra x = split_extension(rep);
        const std::size_t n = rep.alg_dim(), m = rep.mod_dim();
        std::vector<Vec> trailing;
        for (std::size_t i = 0; i < m; ++i) trailing.push_back(unit_vec(f, n + m, n + i));
        Subspace block = Subspace::row_span(f, n + m, trailing);
        c.check(is_ideal(x, block), tag + ": module block must be an ideal of the extension");
        Representation back = rep_from_ideal(x, block);
        c.check(back.algebra().constants() == rep.algebra().constants(),
                tag + ": extension quotient must reproduce the algebra exactly");
        c.check(back.t_mats() == rep.t_mats() && back.s_mats() == rep.s_mats(),
                tag + ": extension quotient must reproduce the actions exactly");
    }
}

// ---- suite: irreducible structure ------------------------------------------

void suite_irreducible(Ctx& c) {
    // Companion matrix of x^2 + 1; irreducible over F_3 (no square root of
    // -1), reducible over F_5 (2^2 = -1).
    auto companion = [](const FieldSpec& f) {
        Matrix t(f, 2, 2);
        t.set(0, 1, Scalar::of_int(f, -1));
        t.set(1, 0, Scalar::one(f));
        return t;
    };
    {
        FieldSpec f3 = FieldSpec::prime(3);
        LeibnizAlgebra a1 = catalog_entry(f3, "abelian1")->algebra;
        Matrix t = companion(f3);
        std::vector<std::tuple<Matrix, IrredBranch, std::string>> variants;
        variants.emplace_back(Matrix(f3, 2, 2), IrredBranch::antisymmetric, "antisymmetric");
        variants.emplace_back(-t, IrredBranch::symmetric, "symmetric");
        for (const auto& [s, branch, label] : variants) {
            Representation rep = Representation::validate(a1, {t}, {s});
            bool ok = false;
            try {
                IrredReport r = verify_irred_theorem(rep);
                ok = r.certified && !r.theorem_violated && r.branch == branch &&
                     r.centraliser_dim == 0 && r.quotient_dim == 1 && r.quotient_is_lie;
            } catch (const NotIrreducible&) {
            }
            c.check(ok, std::string("rotation module over F3 (") + label +
                            ") must certify irreducible with the right branch");
        }
    }
    {
        FieldSpec f5 = FieldSpec::prime(5);
        LeibnizAlgebra a1 = catalog_entry(f5, "abelian1")->algebra;
        Matrix t = companion(f5);
        Representation rep = Representation::validate(a1, {t}, {Matrix(f5, 2, 2)});
        bool threw = false;
        try {
            verify_irred_theorem(rep);
        } catch (const NotIrreducible& e) {
            threw = e.witness.proper && e.witness.subspace.dim() == 1;
        }
        c.check(threw, "rotation module over F5 must expose an eigenline");
    }
    {
        // A2 with the 1-dimensional symmetric module t = 1, s = -1; the
        // centraliser is exactly span{e2} and the quotient is the Lie
        // algebra of dimension 1.
        FieldSpec q = FieldSpec::rationals();
        LeibnizAlgebra a2 = catalog_entry(q, "A2")->algebra;
        Matrix one(q, 1, 1), minus(q, 1, 1);
        one.set(0, 0, Scalar::one(q));
        minus.set(0, 0, Scalar::of_int(q, -1));
        Representation rep =
            Representation::validate(a2, {one, Matrix(q, 1, 1)}, {minus, Matrix(q, 1, 1)});
        bool ok = false;
        try {
            IrredReport r = verify_irred_theorem(rep);
            ok = r.certified && !r.theorem_violated && r.branch == IrredBranch::symmetric &&
                 r.centraliser_dim == 1 && r.quotient_dim == 1 && r.quotient_is_lie;
        } catch (const NotIrreducible&) {
        }
        c.check(ok, "symmetric line module over A2 must pass the structure checks");
    }
}

} // namespace

bool SelftestReport::ok() const {
    for (const SuiteResult& s : suites)
        if (!s.ok()) return false;
    return true;
}

std::size_t SelftestReport::total_checks() const {
    std::size_t n = 0;
    for (const SuiteResult& s : suites) n += s.checks;
    return n;
}

std::size_t SelftestReport::total_failures() const {
    std::size_t n = 0;
    for (const SuiteResult& s : suites) n += s.failures.size();
    return n;
}

SelftestReport run_selftest(const SelftestOptions& opts) {
    SelftestReport report{opts.seed, {}};
    auto run = [&](const std::string& name, auto&& body) {
        SuiteResult s{name, 0, {}};
        Ctx ctx{&s};
        body(ctx);
        report.suites.push_back(std::move(s));
    };
    run("catalog-invariants", [&](Ctx& c) { suite_catalog(c, opts.inject_defect); });
    run("validation-rejects", [&](Ctx& c) { suite_rejects(c); });
    std::vector<std::pair<FieldSpec, InstanceSet>> portfolios;
    for (const FieldSpec& f : field_portfolio())
        portfolios.emplace_back(f, random_instances(opts.seed, f, default_bounds(f)));
    run("kernel-identities", [&](Ctx& c) {
        for (auto& [f, inst] : portfolios) suite_kernel(c, opts.seed, f, inst);
    });
    run("algebra-engel", [&](Ctx& c) {
        for (auto& [f, inst] : portfolios) suite_algebra_engel(c, f, inst);
    });
    run("representation-engel", [&](Ctx& c) {
        for (auto& [f, inst] : portfolios) suite_rep_engel(c, f, inst);
    });
    run("file-roundtrip", [&](Ctx& c) {
        for (auto& [f, inst] : portfolios) suite_roundtrip(c, f, inst);
    });
    run("extension-inverse", [&](Ctx& c) {
        for (auto& [f, inst] : portfolios) suite_extension(c, f, inst);
    });
    run("irreducible-structure", [&](Ctx& c) { suite_irreducible(c); });
    return report;
}

std::string selftest_report_text(const SelftestReport& r) {
    std::ostringstream out;
    for (const SuiteResult& s : r.suites) {
        out << "suite " << s.name << ": " << (s.ok() ? "ok" : "FAIL") << " (" << s.checks
            << " checks)\n";
        for (const std::string& f : s.failures) out << "  - " << f << "\n";
    }
    out << "selftest: " << (r.ok() ? "ok" : "FAIL") << " (" << r.total_checks() << " checks, "
        << r.total_failures() << " failures, seed " << r.seed << ")\n";
    return out.str();
}

std::string selftest_report_json(const SelftestReport& r) {
    nlohmann::ordered_json j;
    j["seed"] = r.seed;
    j["ok"] = r.ok();
    j["checks"] = r.total_checks();
    j["failures"] = r.total_failures();
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const SuiteResult& s : r.suites) {
        nlohmann::ordered_json js;
        js["name"] = s.name;
        js["ok"] = s.ok();
        js["checks"] = s.checks;
        js["failures"] = s.failures;
        suites.push_back(std::move(js));
    }
    j["suites"] = std::move(suites);
    return j.dump(2) + "\n";
}

} // namespace engellab
