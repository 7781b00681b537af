#include "symcirc/circuit.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace symcirc {
namespace {

TEST(CircuitTest, EmptyCircuitHasOnlyConstants) {
  Circuit c(0);
  EXPECT_EQ(c.num_nodes(), 2u);
  EXPECT_EQ(c.nodes()[0].kind, GateKind::Const0);
  EXPECT_EQ(c.nodes()[1].kind, GateKind::Const1);
  EXPECT_TRUE(c.inputs().empty());
  EXPECT_EQ(c.size(), 0u);
}

TEST(CircuitTest, InputsHaveDistinctDenseIds) {
  Circuit c(3);
  auto in = c.inputs();
  ASSERT_EQ(in.size(), 3u);
  EXPECT_EQ(in[0].id, 2u);
  EXPECT_EQ(in[1].id, 3u);
  EXPECT_EQ(in[2].id, 4u);

  Circuit wide(64);
  EXPECT_EQ(wide.inputs().size(), 64u);
  EXPECT_EQ(wide.size(), 0u);
}

TEST(CircuitTest, IdentityAndAnnihilatorRules) {
  Circuit c(2);
  Wire x = c.input(0);
  Wire y = c.input(1);
  EXPECT_EQ(c.land(x, c.const1()), x);
  EXPECT_EQ(c.land(x, c.const0()), c.const0());
  EXPECT_EQ(c.lor(x, c.const1()), c.const1());
  EXPECT_EQ(c.lor(x, c.const0()), x);
  EXPECT_EQ(c.lxor(x, c.const0()), x);
  EXPECT_EQ(c.lxor(x, x), c.const0());
  EXPECT_EQ(c.land(x, x), x);
  EXPECT_EQ(c.lor(y, y), y);
  EXPECT_EQ(c.size(), 0u);

  Wire nx = c.lnot(x);
  EXPECT_EQ(c.lnot(nx), x);
  EXPECT_EQ(c.land(x, nx), c.const0());
  EXPECT_EQ(c.lor(nx, x), c.const1());
  EXPECT_EQ(c.size(), 1u);
}

TEST(CircuitTest, ConstantOperandsFold) {
  Circuit c(0);
  EXPECT_EQ(c.land(c.const1(), c.const1()), c.const1());
  EXPECT_EQ(c.lor(c.const0(), c.const0()), c.const0());
  EXPECT_EQ(c.lxor(c.const1(), c.const1()), c.const0());
  EXPECT_EQ(c.lxor(c.const1(), c.const0()), c.const1());
  EXPECT_EQ(c.lnot(c.const0()), c.const1());
  EXPECT_EQ(c.size(), 0u);
}

TEST(CircuitTest, StructuralHashingReusesGates) {
  Circuit c(2);
  Wire a = c.land(c.input(0), c.input(1));
  Wire b = c.land(c.input(0), c.input(1));
  Wire swapped = c.land(c.input(1), c.input(0));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, swapped);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_NE(c.lor(c.input(0), c.input(1)), a);
}

TEST(CircuitTest, AddGateValidatesArityAndOwnership) {
  Circuit c(2);
  std::vector<Wire> one{c.input(0)};
  std::vector<Wire> two{c.input(0), c.input(1)};
  EXPECT_THROW(c.add_gate(GateKind::And, one), CircuitError);
  EXPECT_THROW(c.add_gate(GateKind::Not, two), CircuitError);
  EXPECT_THROW(c.add_gate(GateKind::Input, {}), CircuitError);

  Circuit other(2);
  try {
    c.land(c.input(0), other.input(1));
    FAIL() << "foreign wire accepted";
  } catch (const CircuitError& e) {
    EXPECT_EQ(e.code(), CircuitError::Code::ForeignWire);
  }
  EXPECT_EQ(c.add_gate(GateKind::Xor, two), c.lxor(c.input(0), c.input(1)));
}

TEST(CircuitTest, FreezeContract) {
  Circuit c(2);
  EXPECT_THROW(c.freeze(), CircuitError);
  Wire x = c.lxor(c.input(0), c.input(1));
  c.add_output(x);
  auto before = c.evaluate(std::vector<bool>{true, false});
  c.freeze();
  c.freeze();
  EXPECT_TRUE(c.frozen());
  try {
    c.land(c.input(0), c.input(1));
    FAIL() << "frozen circuit accepted a gate";
  } catch (const CircuitError& e) {
    EXPECT_EQ(e.code(), CircuitError::Code::Frozen);
  }
  EXPECT_EQ(c.evaluate(std::vector<bool>{true, false}), before);
  EXPECT_EQ(before, std::vector<bool>{true});
}

TEST(CircuitTest, EvaluateChecksLengthAndIsDeterministic) {
  Circuit c(2);
  c.add_output(c.lxor(c.input(0), c.input(1)));
  EXPECT_THROW(c.evaluate(std::vector<bool>{true}), CircuitError);
  auto first = c.evaluate(std::vector<bool>{true, true});
  EXPECT_EQ(first, c.evaluate(std::vector<bool>{true, true}));
  EXPECT_EQ(first, std::vector<bool>{false});
}

TEST(CircuitTest, DepthCountsLogicGatesOnly) {
  Circuit through(1);
  through.add_output(through.input(0));
  EXPECT_EQ(through.depth(), 0u);

  Circuit tree(8);
  std::vector<Wire> layer = tree.inputs();
  while (layer.size() > 1) {
    std::vector<Wire> next;
    for (std::size_t i = 0; i < layer.size(); i += 2) next.push_back(tree.lxor(layer[i], layer[i + 1]));
    layer = next;
  }
  tree.add_output(layer[0]);
  EXPECT_EQ(tree.depth(), 3u);
  EXPECT_EQ(tree.size(), 7u);
}

TEST(CircuitTest, AnalysisIsPure) {
  Circuit c(3);
  c.add_output(c.lor(c.land(c.input(0), c.input(1)), c.input(2)));
  c.freeze();
  const auto size = c.size();
  const auto depth = c.depth();
  for (int a = 0; a < 8; ++a) c.evaluate(std::vector<bool>{(a & 1) != 0, (a & 2) != 0, (a & 4) != 0});
  EXPECT_EQ(c.size(), size);
  EXPECT_EQ(c.depth(), depth);
}

TEST(CircuitTest, OperandsPrecedeGates) {
  Circuit c(4);
  Wire a = c.land(c.input(0), c.input(1));
  Wire b = c.lor(a, c.input(2));
  c.add_output(c.lxor(b, c.lnot(c.input(3))));
  for (std::size_t id = c.first_gate_id(); id < c.num_nodes(); ++id) {
    const Node& n = c.nodes()[id];
    EXPECT_LT(n.a, id);
    if (arity(n.kind) == 2) EXPECT_LT(n.b, id);
  }
}

// Random gate sequences evaluated by a plain interpreter over the same
// operand references, without folding or hashing.
TEST(CircuitTest, FoldingAgreesWithUnfoldedReference) {
  constexpr std::size_t kInputs = 12;
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    Circuit c(kInputs);
    std::vector<Wire> wires{c.const0(), c.const1()};
    for (Wire w : c.inputs()) wires.push_back(w);
    struct Step {
      GateKind kind;
      std::size_t a, b;
    };
    std::vector<Step> steps;
    const GateKind kinds[] = {GateKind::And, GateKind::Or, GateKind::Xor, GateKind::Not};
    for (int g = 0; g < 80; ++g) {
      Step s{kinds[rng() % 4], rng() % wires.size(), rng() % wires.size()};
      steps.push_back(s);
      wires.push_back(s.kind == GateKind::Not ? c.lnot(wires[s.a]) : c.add_gate(s.kind, std::vector<Wire>{wires[s.a], wires[s.b]}));
    }
    for (std::size_t k = 2 + kInputs; k < wires.size(); ++k) c.add_output(wires[k]);

    testing::for_each_block(kInputs, [&](std::uint64_t, std::uint64_t, const std::vector<std::uint64_t>& words) {
      std::vector<std::uint64_t> ref{0, ~std::uint64_t{0}};
      ref.insert(ref.end(), words.begin(), words.end());
      for (const Step& s : steps) {
        switch (s.kind) {
          case GateKind::And: ref.push_back(ref[s.a] & ref[s.b]); break;
          case GateKind::Or: ref.push_back(ref[s.a] | ref[s.b]); break;
          case GateKind::Xor: ref.push_back(ref[s.a] ^ ref[s.b]); break;
          default: ref.push_back(~ref[s.a]); break;
        }
      }
      auto got = c.evaluate_words(words);
      for (std::size_t k = 0; k < got.size(); ++k) ASSERT_EQ(got[k], ref[2 + kInputs + k]);
    });
  }
}

TEST(CircuitTest, SweepDropsDeadGates) {
  Circuit c(3);
  c.land(c.input(0), c.input(1));  // dead
  Wire live = c.lxor(c.input(1), c.input(2));
  c.add_output(live);
  c.freeze();
  std::vector<std::uint32_t> map;
  Circuit swept = c.sweep(&map);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(swept.size(), 1u);
  EXPECT_TRUE(swept.frozen());
  EXPECT_EQ(map[live.id], swept.outputs()[0].id);
  for (int a = 0; a < 8; ++a) {
    std::vector<bool> x{(a & 1) != 0, (a & 2) != 0, (a & 4) != 0};
    EXPECT_EQ(c.evaluate(x), swept.evaluate(x));
  }
}

TEST(CircuitTest, LowerXorPreservesFunctionWithinFourTimesSize) {
  Circuit c(4);
  Wire s = c.lxor(c.lxor(c.input(0), c.input(1)), c.lxor(c.input(2), c.input(3)));
  c.add_output(s);
  c.add_output(c.land(s, c.input(0)));
  c.freeze();
  Circuit lowered = c.lower_xor();
  for (const Node& n : lowered.nodes()) EXPECT_NE(n.kind, GateKind::Xor);
  EXPECT_LE(lowered.size(), 4 * c.size());
  testing::for_each_block(4, [&](std::uint64_t, std::uint64_t lanes, const std::vector<std::uint64_t>& words) {
    const std::uint64_t mask = lanes == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lanes) - 1;
    auto x = c.evaluate_words(words);
    auto y = lowered.evaluate_words(words);
    for (std::size_t k = 0; k < x.size(); ++k) EXPECT_EQ(x[k] & mask, y[k] & mask);
  });
}

TEST(CircuitTest, MutationCopyIsIndependent) {
  Circuit c(2);
  Wire g = c.land(c.input(0), c.input(1));
  c.add_output(g);
  c.freeze();
  Circuit m = c.with_gate_kind(g.id, GateKind::Or);
  EXPECT_EQ(c.nodes()[g.id].kind, GateKind::And);
  EXPECT_EQ(m.nodes()[g.id].kind, GateKind::Or);
  EXPECT_EQ(m.evaluate(std::vector<bool>{true, false}), std::vector<bool>{true});
  EXPECT_EQ(c.evaluate(std::vector<bool>{true, false}), std::vector<bool>{false});
  EXPECT_THROW(c.with_gate_kind(g.id, GateKind::Not), CircuitError);
}

TEST(BusTest, WidthAndExtension) {
  Circuit c(2);
  EXPECT_THROW(Bus(std::vector<Wire>{}), CircuitError);
  Bus b({c.input(0), c.input(1)});
  Bus wide = b.zero_extend(c, 4);
  EXPECT_EQ(wide.width(), 4u);
  EXPECT_EQ(wide[3], c.const0());
  EXPECT_EQ(wide.truncate(1).width(), 1u);
  Circuit other(1);
  EXPECT_THROW(Bus({c.input(0), other.input(0)}), CircuitError);
}

}  // namespace
}  // namespace symcirc
