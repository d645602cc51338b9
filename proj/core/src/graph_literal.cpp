// Copyright 2026 The pgstlab Authors
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

#include "pgstlab/graph_literal.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include <optional>

#include "pgstlab/error.hpp"

namespace pgstlab {
namespace {

struct Node {
  std::optional<std::variant<CirculantGraph, CompositeGraph>> value;
  bool complemented = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedGraph run() {
    Node node = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return ParsedGraph{std::move(*node.value), std::move(notes_)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a graph constructor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a non-negative integer");
    if (value < 0) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  // `n` or `n; a, b, ...` or `n;` up to the closing parenthesis.
  std::pair<std::int64_t, std::vector<std::int64_t>> order_and_list() {
    const std::int64_t n = integer();
    std::vector<std::int64_t> items;
    if (peek(';')) {
      ++pos_;
      if (!peek(')')) {
        items.push_back(integer());
        while (peek(',')) {
          ++pos_;
          items.push_back(integer());
        }
      }
    }
    return {n, std::move(items)};
  }

  const CirculantGraph& circulant_operand(const Node& node, std::size_t at,
                                          const char* ctor) const {
    if (const auto* g = std::get_if<CirculantGraph>(&*node.value)) return *g;
    throw ParseError(at, std::string(ctor) + " requires circulant operands, not a product");
  }

  Node expr() {
    const std::string name = identifier();
    const std::size_t at = pos_;
    expect('(');
    Node node;
    if (name == "cycle") {
      node.value = make_cycle(integer());
    } else if (name == "circulant") {
      auto [n, items] = order_and_list();
      node.value = make_circulant(n, std::move(items));
    } else if (name == "gcd") {
      auto [n, items] = order_and_list();
      DivisorSet divisors(n, std::move(items));
      if (divisors.empty()) {
        notes_.push_back("gcd(" + std::to_string(n) +
                         ";) has an empty divisor set and is the edgeless graph");
      }
      node.value = make_gcd_graph(divisors);
    } else if (name == "union") {
      const std::size_t first_at = pos_;
      Node a = expr();
      expect(',');
      const std::size_t second_at = pos_;
      Node b = expr();
      const auto& ga = circulant_operand(a, first_at, "union");
      const auto& gb = circulant_operand(b, second_at, "union");
      if (ga.degree() == 0 || gb.degree() == 0) {
        notes_.push_back("union with an edgeless operand reduces to the other operand");
      }
      node.value = union_graphs(ga, gb);
    } else if (name == "complement") {
      const std::size_t inner_at = pos_;
      Node inner = expr();
      node.value = complement_graph(circulant_operand(inner, inner_at, "complement"));
      node.complemented = true;
    } else if (name == "product") {
      std::vector<CompositeGraph::Factor> factors;
      do {
        if (!factors.empty()) ++pos_;
        Node part = expr();
        if (auto* composite = std::get_if<CompositeGraph>(&*part.value)) {
          factors.insert(factors.end(), composite->factors().begin(),
                         composite->factors().end());
        } else {
          factors.push_back({std::get<CirculantGraph>(*part.value), part.complemented});
        }
      } while (peek(','));
      node.value = CompositeGraph(std::move(factors));
    } else {
      throw ParseError(at - name.size(), "unknown graph constructor '" + name + "'");
    }
    expect(')');
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> notes_;
};

}  // namespace

const CirculantGraph& ParsedGraph::circulant() const {
  if (const auto* g = std::get_if<CirculantGraph>(&value)) return *g;
  throw Error(ErrorKind::invalid_argument, "graph is a product, not a circulant");
}

CompositeGraph ParsedGraph::composite() const {
  if (const auto* g = std::get_if<CompositeGraph>(&value)) return *g;
  return CompositeGraph({{std::get<CirculantGraph>(value), false}});
}

std::int64_t ParsedGraph::order() const {
  return std::visit([](const auto& g) { return g.order(); }, value);
}

ParsedGraph parse_graph(std::string_view literal) { return Parser(literal).run(); }

std::string format_graph(const CirculantGraph& g) {
  std::string out = "circulant(" + std::to_string(g.order()) + ";";
  bool first = true;
  for (const std::int64_t s : g.connection().elements()) {
    out += first ? "" : ",";
    out += std::to_string(s);
    first = false;
  }
  return out + ")";
}

std::string format_graph(const CompositeGraph& g) {
  std::string out = "product(";
  bool first = true;
  for (const auto& f : g.factors()) {
    out += first ? "" : ",";
    out += format_graph(f.graph);
    first = false;
  }
  return out + ")";
}

std::string format_graph(const ParsedGraph& g) {
  return std::visit([](const auto& v) { return format_graph(v); }, g.value);
}

}  // namespace pgstlab
