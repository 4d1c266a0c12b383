#pragma once

// Stable text serialization of MultiplicationPlan, one directive per line:
//
//   stampchain-plan 1
//   chain <a_1> ... <a_k>
//   n <target>
//   mul <j> <h> <i>       (phase 1, ascending j; indices are 1-based)
//   single <c> <i>        (phase 2: y_c = u(x^{a_i}))
//   pair <c> <h> <i>      (phase 2: y_c = v(x^{a_h}, x^{a_i}))
//   end
//
// parse_plan accepts exactly what serialize_plan emits, field order
// included, and re-produces an equal plan value.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <stampchain/plan.hpp>

namespace stampchain {

inline constexpr int kPlanFormatVersion = 1;

inline std::string serialize_plan(const MultiplicationPlan& plan) {
  std::ostringstream out;
  out << "stampchain-plan " << kPlanFormatVersion << '\n';
  out << "chain " << plan.chain.to_string() << '\n';
  out << "n " << plan.n << '\n';
  for (const Phase1Step& s : plan.phase1) {
    out << "mul " << s.j << ' ' << s.h << ' ' << s.i << '\n';
  }
  for (const Phase2Entry& e : plan.phase2) {
    if (e.is_pair) {
      out << "pair " << e.c << ' ' << e.h << ' ' << e.i << '\n';
    } else {
      out << "single " << e.c << ' ' << e.i << '\n';
    }
  }
  out << "end\n";
  return out.str();
}

inline MultiplicationPlan parse_plan(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto bail = [&line_no](const std::string& why) -> std::invalid_argument {
    return std::invalid_argument("plan line " + std::to_string(line_no) + ": " + why);
  };
  auto next = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty()) return std::istringstream(line);
    }
    ++line_no;
    throw bail("unexpected end of input");
  };

  {
    auto fields = next();
    std::string tag;
    int version = 0;
    if (!(fields >> tag >> version) || tag != "stampchain-plan") {
      throw bail("expected 'stampchain-plan <version>' header");
    }
    if (version != kPlanFormatVersion) {
      throw bail("unsupported plan format version " + std::to_string(version));
    }
  }

  std::vector<std::int64_t> elems;
  {
    auto fields = next();
    std::string tag;
    if (!(fields >> tag) || tag != "chain") throw bail("expected 'chain' line");
    std::int64_t v = 0;
    while (fields >> v) elems.push_back(v);
    if (elems.empty()) throw bail("empty chain");
  }

  std::int64_t n = 0;
  {
    auto fields = next();
    std::string tag;
    if (!(fields >> tag >> n) || tag != "n") throw bail("expected 'n <target>' line");
  }

  MultiplicationPlan plan{StampSet(std::move(elems)), n, {}, {}};
  for (;;) {
    auto fields = next();
    std::string tag;
    fields >> tag;
    if (tag == "end") break;
    if (tag == "mul") {
      Phase1Step s;
      if (!(fields >> s.j >> s.h >> s.i)) throw bail("malformed 'mul' line");
      plan.phase1.push_back(s);
    } else if (tag == "single") {
      Phase2Entry e;
      if (!(fields >> e.c >> e.i)) throw bail("malformed 'single' line");
      e.h = e.i;
      e.is_pair = false;
      plan.phase2.push_back(e);
    } else if (tag == "pair") {
      Phase2Entry e;
      if (!(fields >> e.c >> e.h >> e.i)) throw bail("malformed 'pair' line");
      e.is_pair = true;
      plan.phase2.push_back(e);
    } else {
      throw bail("unknown directive '" + tag + "'");
    }
  }
  return plan;
}

}  // namespace stampchain
