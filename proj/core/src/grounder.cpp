#include "dfl/grounder.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dfl {

namespace {

void collectConstants(const Literal& lit, std::set<std::string>& out) {
  for (const auto& t : lit.args) {
    if (!t.isVariable()) out.insert(t.name);
  }
}

Literal substitute(const Literal& lit, const std::map<std::string, std::string>& binding) {
  Literal out = lit;
  for (auto& t : out.args) {
    if (auto it = binding.find(t.name); it != binding.end()) t.name = it->second;
  }
  return out;
}

}  // namespace

std::vector<std::string> constantsOf(const Theory& theory) {
  std::set<std::string> out;
  for (const auto& f : theory.facts) collectConstants(f, out);
  for (const auto& r : theory.rules) {
    collectConstants(r.consequent, out);
    for (const auto& a : r.antecedent) collectConstants(a, out);
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> variablesOf(const Rule& rule) {
  std::vector<std::string> vars;
  auto scan = [&](const Literal& lit) {
    for (const auto& t : lit.args) {
      if (t.isVariable() && std::find(vars.begin(), vars.end(), t.name) == vars.end()) {
        vars.push_back(t.name);
      }
    }
  };
  for (const auto& a : rule.antecedent) scan(a);
  scan(rule.consequent);
  return vars;
}

Theory ground(const Theory& theory) {
  const auto constants = constantsOf(theory);
  Theory out;
  out.facts = theory.facts;

  // Source label -> labels of its instances.
  std::map<std::string, std::vector<std::string>> instances;

  for (const auto& rule : theory.rules) {
    const auto vars = variablesOf(rule);
    auto& labels = instances[rule.label];
    if (vars.empty()) {
      out.addRule(rule);
      labels.push_back(rule.label);
      continue;
    }
    if (constants.empty()) continue;

    // Odometer over constants^|vars|, first variable varying slowest.
    std::vector<std::size_t> digit(vars.size(), 0);
    bool done = false;
    while (!done) {
      std::map<std::string, std::string> binding;
      std::string label = rule.label;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        binding[vars[i]] = constants[digit[i]];
        label += "__" + vars[i] + "_" + constants[digit[i]];
      }
      Rule inst;
      inst.label = label;
      inst.kind = rule.kind;
      inst.consequent = substitute(rule.consequent, binding);
      for (const auto& a : rule.antecedent) inst.antecedent.push_back(substitute(a, binding));
      out.addRule(std::move(inst));
      labels.push_back(label);

      std::size_t pos = vars.size();
      while (true) {
        if (pos == 0) {
          done = true;
          break;
        }
        --pos;
        if (++digit[pos] < constants.size()) break;
        digit[pos] = 0;
      }
    }
  }

  for (const auto& pair : theory.superiority) {
    auto hi = instances.find(pair.superior);
    auto lo = instances.find(pair.inferior);
    if (hi == instances.end() || lo == instances.end()) {
      out.addSuperiority(pair.superior, pair.inferior);  // left for validation to report
      continue;
    }
    for (const auto& h : hi->second) {
      for (const auto& l : lo->second) out.addSuperiority(h, l);
    }
  }

  validateTheory(out);
  return out;
}

}  // namespace dfl
