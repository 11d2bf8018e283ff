#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "pseudoloc/corpus.hpp"
#include "pseudoloc/graph_io.hpp"
#include "pseudoloc/structure.hpp"
#include "pseudoloc/verify.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace pseudoloc;
using namespace testing_support;

TEST(Trees, SmallCounts) {
  EXPECT_EQ(enumerate_trees(3, false).size(), 3u);
  EXPECT_EQ(enumerate_trees(3, true).size(), 1u);
  EXPECT_EQ(enumerate_trees(4, false).size(), 16u);
  EXPECT_EQ(enumerate_trees(5, true).size(), 3u);
}

TEST(Trees, CayleyCounts) {
  for (int n = 2; n <= 8; ++n) {
    long count = 0;
    std::set<std::vector<Edge>> distinct;
    enumerate_trees(n, false, [&](const Graph& g) {
      ++count;
      EXPECT_EQ(g.size(), n - 1);
      if (n <= 6) distinct.insert(g.edges());
    });
    long want = 1;
    for (int i = 0; i < n - 2; ++i) want *= n;
    EXPECT_EQ(count, want) << n;
    if (n <= 6) EXPECT_EQ(static_cast<long>(distinct.size()), want);
  }
}

TEST(Trees, ClassCounts) {
  const std::vector<std::size_t> want = {1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(enumerate_trees(n).size(), want[n - 2]) << n;
}

TEST(Trees, PrueferDecoding) {
  const std::vector<int> seq = {3, 3, 3};
  const Graph star = tree_from_pruefer(5, seq);
  EXPECT_EQ(star.degree(3), 4);
}

TEST(Unicyclic, SmallCounts) {
  const auto three = enumerate_unicyclic(3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(classify(three[0]), FamilyKind::Cycle);
  const auto four = enumerate_unicyclic(4);
  ASSERT_EQ(four.size(), 2u);
  std::set<std::string> got;
  for (const auto& g : four) got.insert(canonical_graph6(g));
  EXPECT_EQ(got, (std::set<std::string>{canonical_graph6(cycle(4)), canonical_graph6(paw())}));
}

TEST(Unicyclic, ClassAndLabelledCounts) {
  const std::vector<std::size_t> classes = {1, 2, 5, 13, 33, 89, 240, 657};
  for (int n = 3; n <= 10; ++n) {
    const auto all = enumerate_unicyclic(n);
    EXPECT_EQ(all.size(), classes[n - 3]) << n;
    for (const auto& g : all) {
      EXPECT_EQ(g.size(), n);
      const auto kind = classify(g);
      EXPECT_TRUE(kind == FamilyKind::Cycle || kind == FamilyKind::ProperUnicyclic);
    }
  }
  const std::vector<std::size_t> labelled = {1, 15, 222, 3660};
  for (int n = 3; n <= 6; ++n) {
    std::set<std::vector<Edge>> distinct;
    enumerate_unicyclic(n, false, [&](const Graph& g) { distinct.insert(g.edges()); });
    EXPECT_EQ(distinct.size(), labelled[n - 3]) << n;
    EXPECT_EQ(enumerate_unicyclic(n, false).size(), labelled[n - 3]) << n;
  }
}

TEST(Unicyclic, RepresentativesAreCanonicalAndDistinct) {
  for (int n = 3; n <= 9; ++n) {
    std::set<std::string> seen;
    for (const auto& g : enumerate_unicyclic(n)) {
      const std::string s = encode_graph6(g);
      EXPECT_EQ(s, canonical_graph6(g));
      EXPECT_TRUE(seen.insert(s).second);
    }
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  Gen gen(83);
  for (int i = 0; i < 200; ++i) {
    const int n = gen.uniform(1, 9);
    const Graph g = gen.connected(n, gen.uniform(0, 4));
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (int v = n - 1; v > 0; --v) std::swap(perm[v], perm[gen.uniform(0, v)]);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    const Graph h = Graph::from_edge_list(n, edges);
    EXPECT_EQ(canonical_graph6(g), canonical_graph6(h));
    EXPECT_EQ(canonical_form(g), parse_graph6(canonical_graph6(g)));
  }
  EXPECT_THROW(canonical_graph6(path(10)), Error);
}

TEST(Certificates, SeparateClasses) {
  for (int n = 3; n <= 8; ++n) {
    std::set<std::string> canon, certs;
    for (const auto& g : enumerate_unicyclic(n, false)) {
      canon.insert(canonical_graph6(g));
      certs.insert(unicyclic_certificate(g));
    }
    EXPECT_EQ(canon.size(), certs.size()) << n;
  }
  for (int n = 2; n <= 8; ++n) {
    std::set<std::string> canon, certs;
    for (const auto& g : enumerate_trees(n, false)) {
      canon.insert(canonical_graph6(g));
      certs.insert(tree_certificate(g));
    }
    EXPECT_EQ(canon.size(), certs.size()) << n;
  }
}

TEST(Random, Deterministic) {
  CorpusSpec spec;
  spec.family = Family::Tree;
  spec.max_n = 8;
  spec.seed = 1;
  EXPECT_EQ(random_pseudotree(spec), random_pseudotree(spec));
  spec.count = 5;
  const auto a = random_pseudotrees(spec);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_EQ(a, random_pseudotrees(spec));
  EXPECT_EQ(a[0], random_pseudotree(spec));
}

TEST(Random, UnicyclicHasNEdges) {
  CorpusSpec spec;
  spec.family = Family::Unicyclic;
  spec.max_n = 8;
  spec.seed = 1;
  const Graph g = random_pseudotree(spec);
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.size(), 8);
}

TEST(Random, TreeOnTwoVertices) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    CorpusSpec spec;
    spec.max_n = 2;
    spec.seed = seed;
    const Graph g = random_pseudotree(spec);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
  }
}

TEST(Random, CoversAllLabelledTrees) {
  SeededRng rng(5);
  std::set<std::vector<Edge>> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(random_tree(5, rng).edges());
  EXPECT_EQ(seen.size(), 125u);
}

TEST(Random, RequiresSeed) {
  CorpusSpec spec;
  EXPECT_THROW(random_pseudotrees(spec), Error);
}

TEST(Verify, TreesDim) {
  CorpusSpec spec;
  spec.max_n = 7;
  VerifyOptions opts;
  opts.parameters = {Parameter::Dim};
  const auto s = verify_corpus(spec, opts);
  EXPECT_EQ(s.violations, 0);
  EXPECT_EQ(s.records, 1 + 1 + 2 + 3 + 6 + 11);
}

TEST(Verify, UnicyclicExactTheorems) {
  CorpusSpec spec;
  spec.family = Family::Unicyclic;
  spec.max_n = 7;
  VerifyOptions opts;
  opts.parameters = {Parameter::Dmd, Parameter::Mdim, Parameter::Ldim, Parameter::Sdim};
  std::vector<VerificationRecord> records;
  const auto s = verify_corpus(spec, opts, nullptr, &records);
  EXPECT_EQ(s.violations, 0);
  EXPECT_EQ(s.in_bounds, 0);
  EXPECT_EQ(static_cast<long>(records.size()), s.records);
}

TEST(Verify, UnicyclicIntervalTheorems) {
  CorpusSpec spec;
  spec.family = Family::Unicyclic;
  spec.max_n = 7;
  VerifyOptions opts;
  opts.parameters = {Parameter::Dim, Parameter::Edim};
  const auto s = verify_corpus(spec, opts);
  EXPECT_EQ(s.violations, 0);
  EXPECT_GT(s.in_bounds, 0);
}

TEST(Verify, ReportIsIndependentOfJobs) {
  for (Family f : {Family::Tree, Family::Unicyclic}) {
    CorpusSpec spec;
    spec.family = f;
    spec.max_n = 8;
    VerifyOptions opts;
    opts.parameters = {std::begin(kAllParameters), std::end(kAllParameters)};
    std::ostringstream one, four;
    verify_corpus(spec, opts, &one);
    opts.jobs = 4;
    verify_corpus(spec, opts, &four);
    EXPECT_EQ(one.str(), four.str());
    EXPECT_FALSE(one.str().empty());
  }
}

TEST(Verify, ReportLinesAreJson) {
  CorpusSpec spec;
  spec.family = Family::Unicyclic;
  spec.max_n = 5;
  VerifyOptions opts;
  opts.parameters = {Parameter::Dim, Parameter::Dimk};
  std::ostringstream out;
  const auto s = verify_corpus(spec, opts, &out);
  std::istringstream in(out.str());
  std::string line;
  long lines = 0;
  Json last;
  while (std::getline(in, line)) {
    last = Json::parse(line);
    ++lines;
  }
  EXPECT_EQ(lines, s.records + s.invariant_violations + 1);
  EXPECT_TRUE(last.contains("summary"));
}

TEST(Verify, CapsAreChecked) {
  CorpusSpec spec;
  spec.max_n = 40;
  VerifyOptions opts;
  opts.parameters = {Parameter::Dim};
  try {
    verify_corpus(spec, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCapExceeded);
  }
}
