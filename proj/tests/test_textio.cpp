#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uloc/textio.hpp"
#include "uloc/errors.hpp"

using namespace uloc;

TEST_CASE("ring spec text round trip") {
    RingSpec s;
    s.p = 3; s.k = 2; s.d = 2; s.sigma_order = 2; s.b_exponent = 1;
    s.truncate_odd = true; s.star_mode = StarMode::quadratic;
    RingSpec back = parse_ring_spec_text(ring_spec_to_text(s));
    CHECK(back.p == s.p);
    CHECK(back.k == s.k);
    CHECK(back.d == s.d);
    CHECK(back.sigma_order == s.sigma_order);
    CHECK(back.b_exponent == s.b_exponent);
    CHECK(back.truncate_odd == s.truncate_odd);
    CHECK(back.star_mode == s.star_mode);

    RingSpec z;
    z.b_exponent = -1;
    RingSpec zback = parse_ring_spec_text(ring_spec_to_text(z));
    CHECK(zback.b_exponent == -1);
}

TEST_CASE("ring spec parsing accepts comments and rejects junk by name") {
    RingSpec s = parse_ring_spec_text("# header\np=5\nk=1 # inline\nd=1\nb=zero\n");
    CHECK(s.p == 5);
    CHECK(s.b_exponent == -1);

    CHECK_THROWS_WITH_AS((void)parse_ring_spec_text("p=3\nfrobnicate=yes\n"),
                         "line 2: unknown key 'frobnicate'", parse_error);
    CHECK_THROWS_AS((void)parse_ring_spec_text("p=three\n"), parse_error);
    CHECK_THROWS_AS((void)parse_ring_spec_text("p 3\n"), parse_error);
    CHECK_THROWS_AS((void)parse_ring_spec_text("b=5pm\n"), parse_error);
    CHECK_THROWS_AS((void)parse_ring_spec_text("truncate_odd=maybe\n"), parse_error);
    CHECK_THROWS_AS((void)parse_ring_spec_text("star_mode=fancy\n"), parse_error);
}

TEST_CASE("element text round trip, exhaustive") {
    RingSpec spec;
    spec.p = 3; spec.k = 2; spec.d = 2; spec.sigma_order = 2; spec.b_exponent = 1;
    auto ring = Ring::make(spec);
    for (std::uint64_t i = 0; i < ring->size(); i += 7) {
        Element a = ring->from_index(i);
        CHECK(parse_element(*ring, element_to_text(a)) == a);
    }
    // negative inputs canonicalize rather than fail
    CHECK(parse_element(*ring, "-1,0|0,0") == ring->from_int(-1));
    CHECK_THROWS_AS((void)parse_element(*ring, "1,2,3|0,0"), parse_error);
    CHECK_THROWS_AS((void)parse_element(*ring, "1,2"), parse_error);
    CHECK_THROWS_AS((void)parse_element(*ring, "a,b|0,0"), parse_error);
}

TEST_CASE("matrix parsing catches shape errors") {
    RingSpec spec;
    spec.p = 3; spec.k = 1; spec.d = 1; spec.b_exponent = -1;
    auto ring = Ring::make(spec);
    Matrix j = standard_j(ring.get(), 1);
    CHECK(parse_matrix(ring.get(), "0|0 1|0 ; -1|0 0|0") == j);
    CHECK_THROWS_AS((void)parse_matrix(ring.get(), "1|0 0|0 ; 1|0"), parse_error);
    CHECK_THROWS_AS((void)parse_matrix(ring.get(), ""), parse_error);
    CHECK_THROWS_AS((void)parse_vector(ring.get(), "1|0 0|0"), parse_error);
    Vector v = parse_vector(ring.get(), "1|0 ; 2|1");
    CHECK(v.size() == 2);
    CHECK(v[1] == ring->make_element({2}, {1}));
}

TEST_CASE("sweep files") {
    std::string text =
        "# suite\n"
        "[ring]\n"
        "label=first\n"
        "p=3\nk=1\nd=1\nb=zero\n"
        "m=1\nm=2\n"
        "[ring]\n"
        "p=3\nk=2\nd=1\nstar_mode=trivial\n"
        "m=1\n";
    std::vector<SweepEntry> sweep = parse_sweep_text(text);
    REQUIRE(sweep.size() == 2);
    CHECK(sweep[0].label == "first");
    CHECK(sweep[0].ms == std::vector<int>{1, 2});
    CHECK(sweep[0].spec.b_exponent == -1);
    CHECK(sweep[1].label.empty());
    CHECK(sweep[1].spec.star_mode == StarMode::trivial);

    CHECK_THROWS_AS((void)parse_sweep_text("p=3\n"), parse_error);
    CHECK_THROWS_AS((void)parse_sweep_text("[ring]\np=3\n"), parse_error); // no m
    CHECK_THROWS_AS((void)parse_sweep_text("[ring]\nm=1\nwat=1\n"), parse_error);
    CHECK(parse_sweep_text("").empty());
}

TEST_CASE("the bundled desk suite parses into the seven runs") {
    std::vector<SweepEntry> sweep = load_sweep(DATA_DIR "/desk_suite.sweep");
    REQUIRE(sweep.size() == 6);
    std::size_t runs = 0;
    for (const SweepEntry& e : sweep) {
        runs += e.ms.size();
        CHECK_NOTHROW((void)Ring::make(e.spec));
    }
    CHECK(runs == 7);
}
