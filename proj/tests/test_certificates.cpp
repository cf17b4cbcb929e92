#include <doctest.h>

#include "helpers.hpp"
#include "splitclust/certificate_io.hpp"
#include "splitclust/certificates.hpp"
#include "splitclust/error.hpp"
#include "splitclust/json.hpp"
#include "splitclust/solvers.hpp"

using namespace splitclust;
using testutil::family;
using testutil::letters;
using testutil::vset;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

P3Packing ccl8_packing() {
  return P3Packing{{P3{"a", "b", "c"}, P3{"c", "d", "e"}, P3{"a", "h", "g"}, P3{"e", "f", "g"}, P3{"f", "c", "h"},
                    P3{"b", "g", "d"}}};
}

}  // namespace

TEST_SUITE("certificates") {

TEST_CASE("set families canonicalize and reject empty or repeated sets") {
  const SetFamily f({vset("cb"), vset("a")});
  CHECK(f.sets() == std::vector<VertexSet>{vset("a"), vset("bc")});
  CHECK(f.total_size() == 3);
  CHECK(f.valency("b") == 1);
  CHECK(f.support() == vset("abc"));
  CHECK(kind_of([] { (void)SetFamily({vset("ab"), vset("ba")}); }) == ErrorKind::DuplicateSet);
  CHECK(kind_of([] { (void)SetFamily({VertexSet{}}); }) == ErrorKind::EmptySet);
  CHECK(SetFamily::deduplicated({vset("ab"), {}, vset("ba")}) == std::vector<VertexSet>{vset("ab")});
}

TEST_CASE("sigma clique cover verification") {
  auto r = verify_sigma_cover(testutil::k3(), SigmaCliqueCover(family("abc")), 3);
  CHECK(r.valid);
  CHECK(r.metrics["weight"] == 3);

  r = verify_sigma_cover(testutil::p3(), SigmaCliqueCover(family("ab bc")), 4);
  CHECK(r.valid);
  CHECK(r.metrics["weight"] == 4);
  CHECK(r.valency.at("b") == 2);

  r = verify_sigma_cover(testutil::p3(), SigmaCliqueCover(family("abc")), 9);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.reason.empty());

  CHECK_FALSE(verify_sigma_cover(testutil::p3(), SigmaCliqueCover(family("ab")), 9).valid);
  CHECK_FALSE(verify_sigma_cover(testutil::p3(), SigmaCliqueCover(family("ab bc")), 3).valid);
  CHECK(kind_of([] { (void)verify_sigma_cover(testutil::p3(), SigmaCliqueCover(family("az")), 9); }) ==
        ErrorKind::UnknownVertex);
}

TEST_CASE("node clique cover verification") {
  CHECK(verify_node_cover(testutil::p3(), NodeCliqueCover(family("ab c")), 2).valid);
  CHECK_FALSE(verify_node_cover(testutil::p3(), NodeCliqueCover(family("ab c")), 1).valid);
  CHECK_FALSE(verify_node_cover(testutil::p3(), NodeCliqueCover(family("ab")), 5).valid);
  const Graph two = letters("abcdef", "ab bc ac de ef df");
  CHECK(verify_node_cover(two, NodeCliqueCover(family("abc def")), 2).valid);
}

TEST_CASE("cover cost of the eight-vertex cutting cover") {
  const auto c = cover_cost(testutil::ccl8(), Cover(family("abch cdefg")));
  CHECK(c.nonedges_inside == 3);
  CHECK(c.edges_outside == 2);
  CHECK(c.overlap_excess == 1);
  CHECK(c.total() == 6);
}

TEST_CASE("cover cost basics") {
  const Graph cl = letters("abcde", "ab bc ac de");
  CHECK(cover_cost(cl, Cover(family("abc de"))).total() == 0);
  CHECK(cover_cost(testutil::p3(), Cover(family("abc"))).total() == 1);
  // a nonedge inside two sets is charged once
  const Graph empty = letters("ab", "");
  CHECK(cover_cost(empty, Cover(family("ab a"))).nonedges_inside == 1);
  CHECK(kind_of([] { (void)cover_cost(testutil::p3(), Cover(family("ab"))); }) == ErrorKind::NotACover);
  CHECK(kind_of([] { (void)cover_cost(testutil::p3(), Cover(family("abc z"))); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("verify_cover") {
  auto r = verify_cover(testutil::ccl8(), Cover(family("abch cdefg")), 6);
  CHECK(r.valid);
  CHECK(r.metrics["total"] == 6);
  CHECK(r.metrics["nonedges_inside"] == 3);
  CHECK_FALSE(verify_cover(testutil::ccl8(), Cover(family("abch cdefg")), 5).valid);
}

TEST_CASE("modification sequences") {
  const ModificationSequence split_b{{VertexSplit{Split{"b", vset("a"), vset("c")}}}};
  auto r = verify_modification_sequence(testutil::p3(), split_b, 1, Problem::CVS);
  CHECK(r.valid);
  REQUIRE(r.final_graph);
  CHECK(is_cluster_graph(*r.final_graph));
  CHECK(verify_modification_sequence(testutil::k3(), {}, 0, Problem::CVS).valid);
  CHECK_FALSE(verify_modification_sequence(testutil::p3(), {}, 5, Problem::CEVS).valid);
  CHECK_FALSE(verify_modification_sequence(testutil::p3(), split_b, 0, Problem::CVS).valid);

  const ModificationSequence add{{EdgeAdd{"a", "c"}}};
  CHECK(verify_modification_sequence(testutil::p3(), add, 1, Problem::CEVS).valid);
  CHECK_FALSE(verify_modification_sequence(testutil::p3(), add, 1, Problem::CVS).valid);

  const ModificationSequence bad{{EdgeDelete{"a", "b"}, EdgeDelete{"a", "b"}}};
  try {
    (void)verify_modification_sequence(testutil::p3(), bad, 5, Problem::CEVS);
    FAIL("expected InapplicableStep");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InapplicableStep);
    CHECK(e.step() == 1);
  }
  CHECK(kind_of([] {
          (void)apply_modification(testutil::p3(), EdgeAdd{"a", "b"});
        }) == ErrorKind::InapplicableStep);
}

TEST_CASE("the six-step script of the cutting cover") {
  const Graph g = testutil::ccl8();
  const auto m = cover_to_modifications(g, Cover(family("abch cdefg")));
  CHECK(is_normalized(m));
  const auto r = verify_modification_sequence(g, m, 6, Problem::CEVS);
  CHECK(r.valid);
  CHECK(r.metrics.at("length") == 6);
  CHECK(r.metrics.at("additions") == 3);
  CHECK(r.metrics.at("deletions") == 2);
  CHECK(r.metrics.at("splits") == 1);
}

TEST_CASE("normalization order") {
  const ModificationSequence ok{{EdgeAdd{"a", "c"}, EdgeDelete{"a", "b"}, VertexSplit{Split{"b", {}, vset("c")}}}};
  CHECK(is_normalized(ok));
  const ModificationSequence wrong{{EdgeDelete{"a", "b"}, EdgeAdd{"a", "c"}}};
  CHECK_FALSE(is_normalized(wrong));
}

TEST_CASE("P3 packings") {
  const Graph g = testutil::ccl8();
  auto r = verify_p3_packing(g, ccl8_packing());
  CHECK(r.valid);
  CHECK(r.metrics["lower_bound"] == 6);
  r = verify_p3_packing(g, P3Packing{});
  CHECK(r.valid);
  CHECK(r.metrics["lower_bound"] == 0);
  CHECK_FALSE(verify_p3_packing(g, P3Packing{{P3{"a", "b", "c"}, P3{"a", "b", "c"}}}).valid);
  CHECK_FALSE(verify_p3_packing(g, P3Packing{{P3{"a", "b", "h"}}}).valid);
  CHECK_FALSE(modification_disjoint(P3{"a", "b", "c"}, P3{"h", "b", "g"}));
  CHECK(modification_disjoint(P3{"a", "b", "c"}, P3{"c", "d", "e"}));
  CHECK_FALSE(modification_disjoint(P3{"a", "b", "c"}, P3{"a", "c", "b"}));
}

TEST_CASE("critical-clique respecting covers") {
  const Graph g = testutil::ccl8();
  CHECK_FALSE(cover_respects_critical_cliques(g, Cover(family("abch cdefg"))));
  const Cover four(family("abh bcgh cdfg def"));
  CHECK(cover_respects_critical_cliques(g, four));
  CHECK(cover_cost(g, four).total() == 6);
  CHECK(cover_respects_critical_cliques(letters("abcde", "ab bc ac de"), Cover(family("abc de"))));
  CHECK(kind_of([&] { (void)cover_respects_critical_cliques(g, Cover(family("abc"))); }) == ErrorKind::NotACover);
}

TEST_CASE("certificate JSON round-trips byte for byte") {
  const Certificate cover{Problem::CEVS, 6, family("abch cdefg")};
  const Certificate seq{Problem::CVS, 1,
                        ModificationSequence{{VertexSplit{Split{"b", vset("a"), vset("c")}}, EdgeAdd{"a", "c"},
                                              EdgeDelete{"a", "b"}}}};
  const Certificate pack{Problem::CEVS, 6, ccl8_packing()};
  for (const auto& c : {cover, seq, pack}) {
    const auto text = format_certificate(c);
    CHECK(parse_certificate(text) == c);
    CHECK(format_certificate(parse_certificate(text)) == text);
  }
  CHECK(cover.kind() == CertificateKind::Cover);
  CHECK(seq.kind() == CertificateKind::Sequence);
  CHECK(pack.kind() == CertificateKind::Packing);
}

TEST_CASE("shipped certificates parse and verify") {
  const Graph g = testutil::ccl8();
  const auto cut = read_certificate(testutil::fixtures() / "ccl8-cutting-cover.json");
  CHECK(cut.problem == Problem::CEVS);
  CHECK(verify_cover(g, Cover(std::get<Family>(cut.payload)), cut.budget).valid);
  const auto pack = read_certificate(testutil::fixtures() / "ccl8-packing.json");
  CHECK(verify_p3_packing(g, std::get<P3Packing>(pack.payload)).metrics["lower_bound"] == 6);
  for (const char* name : {"respecting-merge.json", "respecting-cut-edges.json", "respecting-four-sets.json"}) {
    CAPTURE(name);
    const auto c = read_certificate(testutil::fixtures() / name);
    const Cover cov(std::get<Family>(c.payload));
    CHECK(cover_cost(g, cov).total() == 6);
    CHECK(cover_respects_critical_cliques(g, cov));
  }
}

TEST_CASE("malformed certificates") {
  for (const char* bad : {"{}", "[]", "not json", R"({"problem":"xyz","budget":1,"kind":"cover","payload":[]})",
                          R"({"problem":"scc","budget":-1,"kind":"cover","payload":[]})",
                          R"({"problem":"scc","budget":1,"kind":"cover","payload":[[]]})",
                          R"({"problem":"scc","budget":1,"kind":"cover","payload":[["a"],["a"]]})",
                          R"({"problem":"cvs","budget":1,"kind":"sequence","payload":[{"op":"jump"}]})",
                          R"({"problem":"cevs","budget":1,"kind":"packing","payload":[["a","b"]]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)parse_certificate(bad), Error);
  }
}

TEST_CASE("instance JSON round-trip") {
  const Instance inst{Problem::SCC, testutil::ccl8(), 14};
  CHECK(instance_from_json(to_json(inst)) == inst);
}

}  // TEST_SUITE
