// Copyright 2026 The ggstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "ggs/io.hpp"
#include "test_util.hpp"

namespace ggs::io {
namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ggs_io_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Round12, TwelveSignificantDigits) {
  EXPECT_EQ(round12(0.1 + 0.2), 0.3);
  EXPECT_EQ(round12(1.0 / 3.0), 0.333333333333);
  EXPECT_EQ(round12(-0.0), 0.0);
  EXPECT_FALSE(std::signbit(round12(-0.0)));
  EXPECT_EQ(round12(123456789012345.0), 123456789012000.0);
}

TEST(Json, SnapsRoundoffToZero) {
  EXPECT_EQ(complex_json({1e-15, -0.5}).dump(), "[0.0,-0.5]");
  EXPECT_EQ(doubles_json({7.8e-33, 2.0}).dump(), "[0.0,2.0]");
}

TEST(Json, GraphAndStateRoundTrip) {
  const Graph g = family("star", 4);
  const Graph back = graph_from_json(parse_json_text(graph_json(g).dump(), "graph"));
  EXPECT_EQ(back.edges(), g.edges());
  const StateVector s = graph_state(family("line", 3), fourier(3));
  const StateVector t = state_from_json(state_json(s));
  EXPECT_LE((t.amps() - s.amps()).cwiseAbs().maxCoeff(), 1e-11);
  const HadamardMatrix h = catalog("tilde_c");
  EXPECT_LE(max_abs(matrix_from_json(hadamard_json(h)) - h.entries()), 1e-11);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(parse_json_text("{", "x"), ParseError);
  EXPECT_THROW(matrix_from_json(Json{{"d", 2}, {"entries", Json::array()}}), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"d":1,"entries":[[[1]]]})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[0]]})")), ParseError);
  EXPECT_THROW(state_from_json(Json::parse(R"({"n":1,"d":2,"amps":[[1,0]]})")), ParseError);
  EXPECT_THROW(read_file("/nonexistent/ggs/file.json"), ParseError);
}

TEST(Json, InvalidObjectsAreDomainErrors) {
  EXPECT_GGS_ERROR(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,0]]})")), ErrorCode::SelfLoop);
  EXPECT_GGS_ERROR(state_from_json(Json::parse(R"({"n":1,"d":2,"amps":[[1,0],[1,0]]})")).require_normalized(),
                   ErrorCode::NotNormalized);
}

TEST(Names, Hadamard) {
  EXPECT_EQ(load_hadamard("fourier:5").d(), 5);
  EXPECT_LE(max_abs(load_hadamard("h_alpha:0.6283185307179586").entries() - h_alpha(testing::kPi / 5).entries()), 1e-15);
  EXPECT_EQ(load_hadamard("h_d6").d(), 6);
  EXPECT_EQ(load_hadamard("tilde_a").d(), 4);
  EXPECT_THROW(load_hadamard("fourier"), ParseError);
  EXPECT_THROW(load_hadamard("fourier:x"), ParseError);
  EXPECT_THROW(load_hadamard("h_d6:2"), ParseError);
  EXPECT_GGS_ERROR(load_hadamard("tilde_z"), ErrorCode::UnknownName);
}

TEST(Names, HadamardFromFile) {
  const std::string path = temp_file("h.json", hadamard_json(fourier(3)).dump());
  EXPECT_LE(max_abs(load_hadamard(path).entries() - fourier(3).entries()), 1e-11);
  const std::string bad = temp_file("bad.json", R"({"d":2,"entries":[[[1,0],[1,0]],[[1,0],[1,0]]]})");
  EXPECT_GGS_ERROR(load_hadamard(bad), ErrorCode::NotHadamard);
}

TEST(Names, Graph) {
  EXPECT_EQ(load_graph("triangle").edges().size(), 3u);
  EXPECT_EQ(load_graph("star:5").n(), 5);
  EXPECT_EQ(load_graph("empty:2").edges().size(), 0u);
  EXPECT_THROW(load_graph("line"), ParseError);
  EXPECT_THROW(load_graph("cycle:3.5"), ParseError);
  const std::string path = temp_file("g.json", R"({"n":3,"edges":[[0,2]]})");
  EXPECT_EQ(load_graph(path).edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(Names, Operator) {
  EXPECT_LE(max_abs(load_operator("X", 3) - pauli_xz(3).x), 0.0);
  EXPECT_LE(max_abs(load_operator("Z", 3) - pauli_xz(3).z), 0.0);
  EXPECT_LE(max_abs(load_operator("xz:4:1", 3) - weyl(3, 1, 1)), 1e-15);
  EXPECT_LE(max_abs(load_operator("I", 2) - CMatrix::Identity(2, 2)), 0.0);
  EXPECT_THROW(load_operator("xz:1", 3), ParseError);
  EXPECT_THROW(load_operator("xz:-1:0", 3), ParseError);
  const std::string path = temp_file("op.json", hadamard_json(fourier(2)).dump());
  EXPECT_GGS_ERROR(load_operator(path, 3), ErrorCode::DimensionMismatch);
}

TEST(Names, ClassicalCodeFile) {
  const std::string path = temp_file("code.txt", "# two words\n01\n10\n");
  const ClassicalCode c = load_classical_code(path, 2);
  EXPECT_EQ(c.size(), 2);
  EXPECT_EQ(c.n(), 2);
}

}  // namespace
}  // namespace ggs::io
