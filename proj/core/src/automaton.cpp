#include "christol/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "christol/errors.hpp"

namespace christol {

void validate(const Dfao& a) {
  const std::size_t p = a.p.value();
  if (a.states.empty()) throw SchemaError("automaton has no states");
  if (a.start >= a.states.size()) throw SchemaError("start state out of range");
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    const auto& st = a.states[s];
    if (st.output >= p) throw SchemaError("state " + std::to_string(s) + ": output out of range");
    if (st.next.size() != p) {
      throw SchemaError("state " + std::to_string(s) + ": expected " + std::to_string(p) +
                        " transitions, got " + std::to_string(st.next.size()));
    }
    for (auto t : st.next) {
      if (t >= a.states.size()) throw SchemaError("state " + std::to_string(s) + ": transition out of range");
    }
  }
}

Dfao build_dfao(const BranchSpec& spec, const ClosureConfig& cfg) {
  cfg.validate();
  const Prime p = spec.prime();
  BranchExpansion source(spec, cfg.max_precision);

  Dfao a{p, 0, {}};
  std::vector<DigitPath> paths;
  std::map<std::vector<Residue>, std::size_t> ids;

  auto intern = [&](DigitPath path) -> std::size_t {
    const auto s = source.along(path, cfg.n_eq);
    std::vector<Residue> key(s.coeffs().begin(), s.coeffs().end());
    auto [it, inserted] = ids.try_emplace(std::move(key), a.states.size());
    if (inserted) {
      if (a.states.size() >= cfg.max_states) throw StateCapExceeded(cfg.max_states);
      a.states.push_back({s[0], std::vector<std::size_t>(p.value(), 0)});
      paths.push_back(std::move(path));
    }
    return it->second;
  };

  intern({});
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    for (unsigned d = 0; d < p.value(); ++d) {
      DigitPath path = paths[s];
      path.push_back(d);
      a.states[s].next[d] = intern(std::move(path));
    }
  }
  return a;
}

Dfao dfao_from_linear(const KernelRepresentation& rep, std::size_t max_states) {
  const Prime p = rep.p;
  Dfao a{p, 0, {}};
  std::map<std::vector<Residue>, std::size_t> ids;
  std::vector<std::vector<Residue>> vectors;

  auto intern = [&](std::vector<Residue> alpha) -> std::size_t {
    auto [it, inserted] = ids.try_emplace(alpha, a.states.size());
    if (inserted) {
      if (a.states.size() >= max_states) throw StateCapExceeded(max_states);
      a.states.push_back({alpha_output(rep, alpha).value(), std::vector<std::size_t>(p.value(), 0)});
      vectors.push_back(std::move(alpha));
    }
    return it->second;
  };

  intern(rep.initial);
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    for (unsigned d = 0; d < p.value(); ++d) {
      a.states[s].next[d] = intern(alpha_step(rep, vectors[s], d));
    }
  }
  return a;
}

Dfao canonicalize(const Dfao& a) {
  validate(a);
  const std::size_t none = a.states.size();
  std::vector<std::size_t> id(a.states.size(), none);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{a.start};
  id[a.start] = 0;
  order.push_back(a.start);
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (auto t : a.states[s].next) {
      if (id[t] == none) {
        id[t] = order.size();
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  Dfao out{a.p, 0, {}};
  out.states.reserve(order.size());
  for (auto s : order) {
    Dfao::State st{a.states[s].output, {}};
    for (auto t : a.states[s].next) st.next.push_back(id[t]);
    out.states.push_back(std::move(st));
  }
  return out;
}

Dfao minimize(const Dfao& input) {
  const Dfao a = canonicalize(input);
  const std::size_t n = a.states.size();
  std::vector<std::size_t> block(n);
  std::size_t blocks = 0;
  {
    std::map<Residue, std::size_t> by_output;
    for (std::size_t s = 0; s < n; ++s) {
      block[s] = by_output.try_emplace(a.states[s].output, by_output.size()).first->second;
    }
    blocks = by_output.size();
  }
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{block[s]};
      for (auto t : a.states[s].next) sig.push_back(block[t]);
      refined[s] = signatures.try_emplace(std::move(sig), signatures.size()).first->second;
    }
    block = std::move(refined);
    if (signatures.size() == blocks) break;
    blocks = signatures.size();
  }
  Dfao quotient{a.p, block[a.start], std::vector<Dfao::State>(blocks)};
  for (std::size_t s = 0; s < n; ++s) {
    auto& st = quotient.states[block[s]];
    st.output = a.states[s].output;
    st.next.clear();
    for (auto t : a.states[s].next) st.next.push_back(block[t]);
  }
  return canonicalize(quotient);
}

std::vector<unsigned> to_digits_lsd(std::string_view decimal, Prime p) {
  if (decimal.empty()) throw MalformedNumber(std::string(decimal));
  std::vector<unsigned> number;  // most significant first
  number.reserve(decimal.size());
  for (char c : decimal) {
    if (c < '0' || c > '9') throw MalformedNumber(std::string(decimal));
    if (number.empty() && c == '0') continue;
    number.push_back(static_cast<unsigned>(c - '0'));
  }
  std::vector<unsigned> digits;
  const std::uint32_t base = p.value();
  while (!number.empty()) {
    std::vector<unsigned> quotient;
    quotient.reserve(number.size());
    std::uint32_t remainder = 0;
    for (unsigned d : number) {
      const std::uint32_t cur = remainder * 10 + d;
      const std::uint32_t q = cur / base;
      remainder = cur % base;
      if (!quotient.empty() || q != 0) quotient.push_back(q);
    }
    digits.push_back(remainder);
    number = std::move(quotient);
  }
  return digits;
}

std::vector<unsigned> to_digits_lsd(std::uint64_t n, Prime p) {
  std::vector<unsigned> digits;
  for (; n > 0; n /= p.value()) digits.push_back(static_cast<unsigned>(n % p.value()));
  return digits;
}

FpElement run(const Dfao& a, std::span<const unsigned> digits) {
  std::size_t s = a.start;
  for (unsigned d : digits) {
    if (d >= a.p.value()) throw DegreeOutOfRange(d, a.p.value());
    s = a.states[s].next[d];
  }
  return {a.states[s].output, a.p};
}

FpElement run(const KernelRepresentation& rep, std::span<const unsigned> digits) {
  std::vector<Residue> alpha = rep.initial;
  for (unsigned d : digits) alpha = alpha_step(rep, alpha, d);
  return alpha_output(rep, alpha);
}

FpElement query(const Dfao& a, std::string_view decimal) { return run(a, to_digits_lsd(decimal, a.p)); }

FpElement query(const KernelRepresentation& rep, std::string_view decimal) {
  return run(rep, to_digits_lsd(decimal, rep.p));
}

std::string export_dot(const Dfao& a) {
  validate(a);
  std::ostringstream os;
  os << "digraph dfao {\n"
     << "  rankdir=LR;\n"
     << "  node [shape=circle];\n"
     << "  init [shape=point];\n";
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    os << "  q" << s << " [label=\"q" << s << '/' << a.states[s].output << "\"];\n";
  }
  os << "  init -> q" << a.start << ";\n";
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    // Targets in order of first appearance, each with all its digits.
    std::vector<std::pair<std::size_t, std::string>> edges;
    const auto& next = a.states[s].next;
    for (std::size_t d = 0; d < next.size(); ++d) {
      auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == next[d]; });
      if (it == edges.end()) {
        edges.emplace_back(next[d], std::to_string(d));
      } else {
        it->second += "," + std::to_string(d);
      }
    }
    for (const auto& [target, label] : edges) {
      os << "  q" << s << " -> q" << target << " [label=\"" << label << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const Dfao& a) {
  validate(a);
  nlohmann::ordered_json j;
  j["format"] = "dfao-v1";
  j["p"] = a.p.value();
  j["digit_order"] = "lsd";
  j["start"] = a.start;
  auto states = nlohmann::ordered_json::array();
  for (const auto& s : a.states) {
    nlohmann::ordered_json st;
    st["output"] = s.output;
    st["next"] = s.next;
    states.push_back(std::move(st));
  }
  j["states"] = std::move(states);
  return j.dump();
}

namespace {

std::uint64_t as_index(const nlohmann::json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw SchemaError(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

Dfao deserialize(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("top level must be an object");
  for (const char* key : {"format", "p", "digit_order", "start", "states"}) {
    if (!j.contains(key)) throw SchemaError(std::string("missing key \"") + key + "\"");
  }
  if (j["format"] != "dfao-v1") throw SchemaError("unknown format tag");
  if (j["digit_order"] != "lsd") throw SchemaError("digit_order must be \"lsd\"");
  const auto raw_p = as_index(j["p"], "p");
  if (raw_p > Prime::kMaxValue || !is_prime(raw_p)) throw SchemaError("p must be a prime <= 65536");
  Dfao a{Prime(raw_p), 0, {}};
  a.start = as_index(j["start"], "start");
  const auto& states = j["states"];
  if (!states.is_array()) throw SchemaError("states must be an array");
  for (const auto& s : states) {
    if (!s.is_object() || !s.contains("output") || !s.contains("next") || !s["next"].is_array()) {
      throw SchemaError("each state needs \"output\" and a \"next\" array");
    }
    const auto out = as_index(s["output"], "output");
    if (out >= raw_p) throw SchemaError("output out of range");
    Dfao::State st{static_cast<Residue>(out), {}};
    for (const auto& t : s["next"]) st.next.push_back(as_index(t, "next entry"));
    a.states.push_back(std::move(st));
  }
  validate(a);
  return a;
}

}  // namespace christol
