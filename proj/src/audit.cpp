#include "otsfc/audit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <tuple>

#include "otsfc/gf2.hpp"

namespace otsfc {

namespace {

void advance_vector(std::vector<Symbol>& v, Symbol base, bool& done) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < base) {
      ++v[i];
      for (std::size_t j = 0; j < i; ++j) v[j] = 1;
      return;
    }
  }
  done = true;
}

}  // namespace

std::vector<SourceAtom> enumerate_sources(
    Symbol m_a, Symbol m_b, std::size_t k,
    const std::optional<std::vector<Symbol>>& fixed_a,
    const std::optional<std::vector<Symbol>>& fixed_b, bool constant_b) {
  std::vector<std::vector<Symbol>> a_choices;
  if (fixed_a) {
    if (fixed_a->size() != k) throw DimensionError("fixed A length must be k");
    a_choices.push_back(*fixed_a);
  } else {
    std::vector<Symbol> a(k, 1);
    bool done = k == 0;
    if (k == 0) a_choices.push_back({});
    while (!done) {
      a_choices.push_back(a);
      advance_vector(a, m_a, done);
    }
  }

  std::vector<std::vector<Symbol>> b_choices;
  if (fixed_b) {
    if (fixed_b->size() != k) throw DimensionError("fixed B length must be k");
    b_choices.push_back(*fixed_b);
  } else if (constant_b) {
    for (Symbol b = 1; b <= m_b; ++b)
      b_choices.push_back(std::vector<Symbol>(k, b));
  } else {
    std::vector<Symbol> b(k, 1);
    bool done = k == 0;
    if (k == 0) b_choices.push_back({});
    while (!done) {
      b_choices.push_back(b);
      advance_vector(b, m_b, done);
    }
  }

  const double prob =
      1.0 / (static_cast<double>(a_choices.size()) *
             static_cast<double>(b_choices.size()));
  std::vector<SourceAtom> atoms;
  atoms.reserve(a_choices.size() * b_choices.size());
  for (const auto& a : a_choices)
    for (const auto& b : b_choices)
      atoms.push_back({prob, SourceSamples{a, b}});
  return atoms;
}

namespace {

std::string key_of(const std::vector<std::uint8_t>& bytes) {
  return std::string(bytes.begin(), bytes.end());
}

std::string serialize_symbols(std::span<const Symbol> symbols) {
  std::vector<std::uint8_t> out;
  for (Symbol s : symbols) append_u32(out, s);
  return key_of(out);
}

std::string serialize_values(std::span<const RangeValue> values) {
  std::vector<std::uint8_t> out;
  for (RangeValue v : values) append_u32(out, v);
  return key_of(out);
}

/// The (Z, resource side, M^r) tuple the privacy formulas quantify over.
std::string serialize_view(const PartyView& view,
                           const std::vector<Message>& all_messages) {
  std::vector<std::uint8_t> out;
  append_u32(out, static_cast<std::uint32_t>(view.local_randomness_record.size()));
  for (std::uint64_t v : view.local_randomness_record) append_u64(out, v);
  for (const auto& side : view.resource_sides) {
    append_u32(out, static_cast<std::uint32_t>(side.x.size()));
    append_bits(out, side.x);
    append_u32(out, static_cast<std::uint32_t>(side.y.size()));
    for (ErasedBit s : side.y) append_u8(out, static_cast<std::uint8_t>(s));
  }
  for (const auto& m : all_messages) {
    auto bytes = serialize_message(m);
    out.insert(out.end(), bytes.begin(), bytes.end());
  }
  return key_of(out);
}

std::string string_bits_key(std::span<const Symbol> a_samples, std::size_t m,
                            Symbol j) {
  std::vector<std::uint8_t> out;
  for (Symbol a : a_samples)
    append_u8(out, FunctionSpec::tuple_bit(a, static_cast<int>(m),
                                           static_cast<int>(j)));
  return key_of(out);
}

double entropy_bits(const std::map<std::string, double>& dist) {
  double h = 0.0;
  for (const auto& [key, p] : dist)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace

PrivacyAuditResult audit_exact_mi(const MiAuditSetup& setup) {
  if (setup.protocol == nullptr) throw ParamError("audit needs a protocol");
  const Protocol& protocol = *setup.protocol;
  const FunctionSpec spec = protocol.function_spec();
  const ResourceDemand demand = protocol.resource_demand();
  const ErasureParams params(setup.p);

  // Joint distribution over (secret, view, conditioning) keys.
  std::map<std::tuple<std::string, std::string, std::string>, double> joint;
  std::size_t atoms_used = 0;

  for (const auto& atom : setup.source_dist) {
    const FunctionOutputs truth = eval_functions(spec, atom.sources);

    std::string secret;
    std::string cond;
    switch (setup.form) {
      case PrivacyForm::alice_secret:
        secret = serialize_symbols(atom.sources.a_samples);
        cond = serialize_symbols(atom.sources.b_samples) +
               serialize_values(truth.g_true);
        break;
      case PrivacyForm::bob_secret:
        secret = serialize_symbols(atom.sources.b_samples);
        cond = serialize_symbols(atom.sources.a_samples) +
               serialize_values(truth.f_true);
        break;
      case PrivacyForm::disjoint: {
        const std::size_t m = spec.m_b();
        if (setup.disjoint_index < 1 || setup.disjoint_index > m)
          throw ParamError("disjoint string index outside {1..m}");
        const Symbol b = atom.sources.b_samples.empty()
                             ? 1
                             : atom.sources.b_samples.front();
        secret = string_bits_key(atom.sources.a_samples, m,
                                 setup.disjoint_index);
        cond = serialize_symbols(atom.sources.b_samples) +
               string_bits_key(atom.sources.a_samples, m, b);
        break;
      }
    }

    std::string view;
    auto body = [&](RandomSource& tape) {
      ErasureSequence forward = sample_bes(params, demand.forward, tape);
      ErasureSequence reverse = sample_bes(params, demand.reverse, tape);
      SessionResult result =
          run_session(protocol, atom.sources, std::move(forward),
                      std::move(reverse), tape, tape);
      const PartyView& observer = setup.form == PrivacyForm::bob_secret
                                      ? result.alice_view
                                      : result.bob_view;
      view = serialize_view(observer, result.transcript.messages);
    };
    auto sink = [&](double prob) {
      ++atoms_used;
      if (prob > 0.0) joint[{secret, view, cond}] += prob;
    };
    if (atoms_used >= setup.atom_cap)
      throw EnumerationCapError("enumeration exceeds atom cap", atoms_used);
    enumerate_paths(body, sink, atom.prob, setup.atom_cap - atoms_used);
  }

  // Marginals.
  std::map<std::string, double> p_c;
  std::map<std::string, double> p_sc, p_vc, p_svc;
  for (const auto& [key, prob] : joint) {
    const auto& [s, v, c] = key;
    p_c[c] += prob;
    p_sc[s + "\x1f" + c] += prob;
    p_vc[v + "\x1f" + c] += prob;
    p_svc[s + "\x1f" + v + "\x1f" + c] += prob;
  }

  PrivacyAuditResult result;
  double mi = 0.0;
  for (const auto& [key, prob] : joint) {
    if (prob <= 0.0) continue;
    const auto& [s, v, c] = key;
    const double ratio = prob * p_c.at(c) /
                         (p_sc.at(s + "\x1f" + c) * p_vc.at(v + "\x1f" + c));
    mi += prob * std::log2(ratio);
  }
  result.mi_bits = mi;
  result.mi_bits_entropy = entropy_bits(p_sc) + entropy_bits(p_vc) -
                           entropy_bits(p_c) - entropy_bits(p_svc);
  return result;
}

PrivacyAuditResult audit_disjoint_gf2(const BootParams& params, Symbol b) {
  const KnowledgeSpan span = boot_knowledge_span(boot_assign(params), b);

  PrivacyAuditResult result;
  for (std::size_t j = 1; j <= span.m; ++j)
    if (gf2_in_span(span.basis, std::uint64_t{1} << (j - 1)))
      result.recoverable_units.push_back(j);

  std::size_t best_weight = span.m + 1;
  for (std::uint64_t v : gf2_span_elements(span.basis)) {
    if (v == 0) continue;
    const auto weight = static_cast<std::size_t>(std::popcount(v));
    if (weight <= 1) continue;
    if (weight > best_weight) continue;
    std::vector<std::size_t> indices;
    for (std::size_t j = 1; j <= span.m; ++j)
      if ((v >> (j - 1)) & 1u) indices.push_back(j);
    if (weight < best_weight) {
      best_weight = weight;
      result.leak_witnesses.clear();
    }
    result.leak_witnesses.push_back(std::move(indices));
  }
  std::sort(result.leak_witnesses.begin(), result.leak_witnesses.end());
  return result;
}

}  // namespace otsfc
