#include <exfin/catalog.hpp>
#include <exfin/depprod.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

using namespace exfin;

namespace {

const WeakLimitStrategy kMin = WeakLimitStrategy::minimal();

ExArrow arrow(const ExObjPtr& a, const ExObjPtr& b, std::vector<int> table) {
    return ex_arrow(a, b, FiniteMap(a->carrier, b->carrier, std::move(table)));
}

// Section count straight from the induced class maps, by hand: the product of
// witness-class counts over each fiber, summed over index classes.  Shares no
// code with the oracle object builder.
long long recount_sections(const ExArrow& f, const ExArrow& g) {
    const ExObj &I = *f.cod, &X = *f.dom, &Y = *g.dom;
    auto cls = [](const ExArrow& h, int c) {
        return h.cod->class_of[static_cast<std::size_t>(
            h.map(h.dom->class_rep[static_cast<std::size_t>(c)]))];
    };
    long long total = 0;
    for (int ic = 0; ic < I.num_classes; ++ic) {
        long long prod = 1;
        for (int xc = 0; xc < X.num_classes; ++xc) {
            if (cls(f, xc) != ic) continue;
            long long nw = 0;
            for (int yc = 0; yc < Y.num_classes; ++yc)
                if (cls(g, yc) == xc) ++nw;
            prod *= nw;
        }
        total += prod;
    }
    return total;
}

void check_instance(const ExArrow& f, const ExArrow& g) {
    DepProd dp = build_dependent_product(f, g);
    DepProdOracle oc = oracle_dependent_product(f, g);
    INFO("X " << f.dom->carrier.describe() << " -> I " << f.cod->carrier.describe() << ", Y "
               << g.dom->carrier.describe());
    CHECK(dp.G->num_classes == oc.object.size());
    CHECK(oc.object.size() == recount_sections(f, g));
    UPReport up = verify_universal_property(dp);
    CHECK(up.ok());
    CHECK_NOTHROW(match_to_oracle(dp, oc));
}

} // namespace

TEST_CASE("two independent choices give two sections") {
    ExObjPtr I = ex_discrete(FiniteSet({"i"}), kMin);
    ExObjPtr X = ex_discrete(FiniteSet({"x0", "x1"}), kMin);
    ExObjPtr Y = ex_discrete(FiniteSet({"y00", "y01", "y10"}), kMin);
    ExArrow f = arrow(X, I, {0, 0});
    ExArrow g = arrow(Y, X, {0, 0, 1});

    DepProd dp = build_dependent_product(f, g);

    // Comprehension carriers, frozen row by row.
    REQUIRE(dp.T0.size() == 2);
    CHECK(dp.T0.label(0) == "((x0,i),(i,i))");
    CHECK(dp.T0.label(1) == "((x1,i),(i,i))");
    CHECK(dp.tau1(0) == 0);
    CHECK(dp.tau2(0) == 0);
    REQUIRE(dp.S0.size() == 3);
    const std::string s0 = "((y00,((x0,i),(i,i))),(x0,x0))";
    const std::string s1 = "((y01,((x0,i),(i,i))),(x0,x0))";
    const std::string s2 = "((y10,((x1,i),(i,i))),(x1,x1))";
    CHECK(dp.S0.label(0) == s0);
    CHECK(dp.S0.label(1) == s1);
    CHECK(dp.S0.label(2) == s2);

    // Two codes, one per choice over the first argument class.
    REQUIRE(dp.fam.F.size() == 2);
    CHECK(dp.fam.F.label(0) == "(i|" + s0 + "," + s2 + ")");
    CHECK(dp.fam.F.label(1) == "(i|" + s1 + "," + s2 + ")");
    CHECK(dp.G0.size() == 2);
    CHECK(dp.g0_sig[0] == std::vector<int>{0, 2});
    CHECK(dp.g0_sig[1] == std::vector<int>{1, 2});
    CHECK(dp.G->num_classes == 2);

    // The display arrow reaches every index but identifies nothing.
    CHECK(is_cover(dp.display));
    CHECK(!is_ex_iso(dp.display));

    UPReport up = verify_universal_property(dp);
    CHECK(up.sections_checked == 2);
    CHECK(up.ok());

    DepProdOracle oc = oracle_dependent_product(f, g);
    REQUIRE(oc.object.size() == 2);
    CHECK(oc.object.label(0) == "(i|x0>y00,x1>y10)");
    CHECK(oc.object.label(1) == "(i|x0>y01,x1>y10)");
    CHECK(oc.sections_per_class == std::vector<long long>{2});

    DepProdIso iso = match_to_oracle(dp, oc);
    CHECK(iso.forward(0) == 0);
    CHECK(iso.forward(1) == 1);
    CHECK(iso.backward(0) == 0);
    CHECK(iso.backward(1) == 1);

    // The graph object: one row per kept assignment, jointly monic components.
    DepProdGraph gr = build_graph_object(dp);
    CHECK(gr.Q0.size() == 4);
    CHECK(gr.Q->num_classes == 4);
    REQUIRE(gr.product_built);
    CHECK(is_ex_mono(*gr.beta));
    CHECK(ex_eq(ex_compose(gr.gxy->to_right, *gr.beta), gr.to_y));
}

TEST_CASE("identified indices share their codes") {
    ExObjPtr I = ex_obj_from_partition(FiniteSet({"a0", "a1", "b"}), {0, 0, 1}, kMin);
    ExObjPtr X = ex_discrete(FiniteSet({"u", "v"}), kMin);
    ExObjPtr Y = ex_discrete(FiniteSet({"w0", "w1"}), kMin);
    ExArrow f = arrow(X, I, {1, 2}); // lands on a non-representative element
    ExArrow g = arrow(Y, X, {0, 1});

    DepProd dp = build_dependent_product(f, g);
    CHECK(dp.T0.size() == 3);
    CHECK(dp.S0.size() == 3);
    // One code per base index; the two codes over identified indices collapse.
    CHECK(dp.fam.F.size() == 3);
    CHECK(dp.G0.size() == 3);
    CHECK(dp.G->num_classes == 2);
    CHECK(is_ex_iso(dp.display));

    CHECK(verify_universal_property(dp).ok());

    DepProdOracle oc = oracle_dependent_product(f, g);
    REQUIRE(oc.object.size() == 2);
    CHECK(oc.object.label(0) == "(a0|u>w0)");
    CHECK(oc.object.label(1) == "(b|v>w1)");
    CHECK_NOTHROW(match_to_oracle(dp, oc));

    DepProdGraph gr = build_graph_object(dp);
    CHECK(gr.Q0.size() == 3);
    CHECK(gr.Q->num_classes == 2);
    REQUIRE(gr.product_built);
    CHECK(is_ex_mono(*gr.beta));
}

TEST_CASE("a choiceless fiber leaves no sections") {
    ExObjPtr I = ex_discrete(FiniteSet({"i", "j"}), kMin);
    ExObjPtr X = ex_discrete(FiniteSet({"x0", "x1"}), kMin);
    ExArrow f = arrow(X, I, {0, 1});

    SECTION("one index keeps a section, the other loses it") {
        ExObjPtr Y = ex_discrete(FiniteSet({"y"}), kMin);
        ExArrow g = arrow(Y, X, {0});
        DepProd dp = build_dependent_product(f, g);
        CHECK(dp.fam.F.size() == 1);
        CHECK(dp.G->num_classes == 1);
        CHECK(!is_cover(dp.display));
        CHECK(verify_universal_property(dp).ok());
        DepProdOracle oc = oracle_dependent_product(f, g);
        REQUIRE(oc.object.size() == 1);
        CHECK(oc.object.label(0) == "(i|x0>y)");
        CHECK(oc.sections_per_class == std::vector<long long>{1, 0});
        CHECK_NOTHROW(match_to_oracle(dp, oc));
    }

    SECTION("no values at all") {
        ExObjPtr Y = ex_discrete(FiniteSet(std::vector<std::string>{}), kMin);
        ExArrow g = arrow(Y, X, {});
        DepProd dp = build_dependent_product(f, g);
        CHECK(dp.fam.F.size() == 0);
        CHECK(dp.G->num_classes == 0);
        CHECK(verify_universal_property(dp).ok());
        DepProdOracle oc = oracle_dependent_product(f, g);
        CHECK(oc.object.size() == 0);
        CHECK_NOTHROW(match_to_oracle(dp, oc));
    }

    SECTION("incomposable data is refused") {
        ExObjPtr Y = ex_discrete(FiniteSet({"y"}), kMin);
        ExArrow bad = arrow(Y, I, {0});
        CHECK_THROWS_WITH(build_dependent_product(f, bad),
                          Catch::Matchers::ContainsSubstring("composable"));
    }
}

TEST_CASE("fully identified worlds keep their two sections") {
    ExObjPtr I = ex_obj_from_partition(FiniteSet({"i0", "i1"}), {0, 0}, kMin);
    ExObjPtr X = ex_obj_from_partition(FiniteSet({"x0", "x1"}), {0, 0}, kMin);
    ExObjPtr Y = ex_obj_from_partition(FiniteSet({"y0", "y1", "y2"}), {0, 0, 1}, kMin);
    ExArrow f = arrow(X, I, {0, 1});
    ExArrow g = arrow(Y, X, {0, 1, 0});

    DepProd dp = build_dependent_product(f, g);
    CHECK(dp.T0.size() == 4);
    CHECK(dp.S0.size() == 12);
    CHECK(dp.fam.F.size() == 18);
    CHECK(dp.G0.size() == 10);
    CHECK(dp.G->num_classes == 2);
    CHECK(is_cover(dp.display));

    UPReport up = verify_universal_property(dp);
    CHECK(up.sections_checked == 2);
    CHECK(up.ok());

    DepProdOracle oc = oracle_dependent_product(f, g);
    CHECK(oc.object.size() == 2);
    CHECK_NOTHROW(match_to_oracle(dp, oc));

    DepProdGraph gr = build_graph_object(dp);
    CHECK(gr.Q0.size() == 20);
    CHECK(gr.Q->num_classes == 2);
    REQUIRE(gr.product_built);
    CHECK(is_ex_mono(*gr.beta));
}

TEST_CASE("degenerate bases behave") {
    SECTION("everything empty") {
        ExObjPtr E = ex_discrete(FiniteSet(std::vector<std::string>{}), kMin);
        ExArrow f = arrow(E, E, {});
        DepProd dp = build_dependent_product(f, f);
        CHECK(dp.G->num_classes == 0);
        CHECK(verify_universal_property(dp).ok());
        DepProdOracle oc = oracle_dependent_product(f, f);
        CHECK(oc.object.size() == 0);
        CHECK_NOTHROW(match_to_oracle(dp, oc));
    }

    SECTION("an empty fiber contributes the empty section") {
        ExObjPtr I = ex_discrete(FiniteSet({"i"}), kMin);
        ExObjPtr E = ex_discrete(FiniteSet(std::vector<std::string>{}), kMin);
        ExArrow f = arrow(E, I, {});
        ExArrow g = arrow(E, E, {});
        DepProd dp = build_dependent_product(f, g);
        REQUIRE(dp.fam.F.size() == 1);
        CHECK(dp.fam.F.label(0) == "(i|)");
        CHECK(dp.G->num_classes == 1);
        CHECK(is_ex_iso(dp.display));
        CHECK(verify_universal_property(dp).ok());
        DepProdOracle oc = oracle_dependent_product(f, g);
        REQUIRE(oc.object.size() == 1);
        CHECK(oc.object.label(0) == "(i|)");
        DepProdIso iso = match_to_oracle(dp, oc);
        CHECK(iso.forward(0) == 0);
    }

    SECTION("terminal everything") {
        ExObjPtr T = ex_terminal(kMin);
        ExArrow f = arrow(T, T, {0});
        DepProd dp = build_dependent_product(f, f);
        CHECK(dp.G->num_classes == 1);
        CHECK(is_ex_iso(dp.display));
        CHECK(verify_universal_property(dp).ok());
    }
}

TEST_CASE("padding multiplies codes but not sections") {
    const WeakLimitStrategy pad = WeakLimitStrategy::padded(2);
    ExObjPtr Ip = ex_discrete(FiniteSet({"i"}), pad);
    ExObjPtr Xp = ex_discrete(FiniteSet({"x"}), pad);
    ExObjPtr Yp = ex_discrete(FiniteSet({"y0", "y1"}), pad);
    ExArrow fp = arrow(Xp, Ip, {0});
    ExArrow gp = arrow(Yp, Xp, {0, 0});

    DepProd dpp = build_dependent_product(fp, gp);
    // Padded proofs double at every stage, so the code count explodes while
    // the identification classes stay put.
    CHECK(dpp.T0.size() == 2);
    CHECK(dpp.S0.size() == 8);
    CHECK(dpp.fam.F.size() == 4096);
    CHECK(dpp.G0.size() == 512);
    CHECK(dpp.G->num_classes == 2);
    CHECK(dpp.G->pack_skipped);
    CHECK(verify_universal_property(dpp).ok());

    ExObjPtr Im = ex_discrete(FiniteSet({"i"}), kMin);
    ExObjPtr Xm = ex_discrete(FiniteSet({"x"}), kMin);
    ExObjPtr Ym = ex_discrete(FiniteSet({"y0", "y1"}), kMin);
    ExArrow fm = arrow(Xm, Im, {0});
    ExArrow gm = arrow(Ym, Xm, {0, 0});

    DepProd dpm = build_dependent_product(fm, gm);
    CHECK(dpm.fam.F.size() == 2);
    CHECK(dpm.G->num_classes == 2);
    CHECK(verify_universal_property(dpm).ok());

    // Both strategies land on the same oracle, so the two matchings compose
    // to a bijection between the construction's classes.
    DepProdOracle ocm = oracle_dependent_product(fm, gm);
    DepProdOracle ocp = oracle_dependent_product(fp, gp);
    REQUIRE(ocm.object == ocp.object);
    DepProdIso im = match_to_oracle(dpm, ocm);
    DepProdIso ip = match_to_oracle(dpp, ocp);
    FiniteMap cross = compose(ip.backward, im.forward);
    CHECK(cross.dom().size() == 2);
    CHECK(cross(0) != cross(1));
}

TEST_CASE("padding stays within the row-level audit") {
    const WeakLimitStrategy pad = WeakLimitStrategy::padded(2);
    ExObjPtr I = ex_discrete(FiniteSet({"i"}), pad);
    ExObjPtr X = ex_discrete(FiniteSet({"x"}), pad);
    ExObjPtr Y = ex_discrete(FiniteSet({"y"}), pad);
    ExArrow f = arrow(X, I, {0});
    ExArrow g = arrow(Y, X, {0});

    DepProdOptions opt;
    opt.pairwise_audit_limit = 300; // force the pairwise re-derivation to run
    DepProd dp = build_dependent_product(f, g, opt);
    CHECK(dp.fam.F.size() == 256);
    CHECK(dp.G0.size() == 256);
    CHECK(dp.G->num_classes == 1);
    CHECK(verify_universal_property(dp).ok());
    CHECK_NOTHROW(match_to_oracle(dp, oracle_dependent_product(f, g)));
}

TEST_CASE("every small world satisfies the universal property") {
    std::vector<ExObjPtr> objs = all_exobjs(2, kMin);
    REQUIRE(objs.size() == 4);
    long long instances = 0;
    for (const auto& I : objs)
        for (const auto& X : objs)
            for (const auto& Y : objs)
                for (const ExArrow& f : enumerate_ex_arrow_classes(X, I))
                    for (const ExArrow& g : enumerate_ex_arrow_classes(Y, X)) {
                        check_instance(f, g);
                        ++instances;
                    }
    CHECK(instances == 90);
}

TEST_CASE("seeded worlds agree with the oracle") {
    SeededGen gen(20260816);
    int built = 0;
    for (int iter = 0; iter < 40; ++iter) {
        ExObjPtr I = gen.random_exobj("i", 0, 3, kMin);
        ExObjPtr X = gen.random_exobj("x", 0, 3, kMin);
        ExObjPtr Y = gen.random_exobj("y", 0, 3, kMin);
        if ((X->num_classes > 0 && I->num_classes == 0) ||
            (Y->num_classes > 0 && X->num_classes == 0))
            continue;
        ExArrow f = gen.random_ex_arrow(X, I);
        ExArrow g = gen.random_ex_arrow(Y, X);
        check_instance(f, g);
        ++built;
    }
    CHECK(built >= 25); // deterministic for this seed; most draws compose
}
