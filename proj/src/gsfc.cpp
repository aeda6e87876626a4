#include "otsfc/gsfc.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "otsfc/rates.hpp"

namespace otsfc {

std::vector<BitString> gsfc_build_strings(const FunctionSpec& spec,
                                          std::span<const Symbol> own_samples,
                                          TransferDirection direction) {
  const bool forward = direction == TransferDirection::alice_to_bob;
  const Symbol choices = forward ? spec.m_b() : spec.m_a();
  const int h = forward ? spec.h_b() : spec.h_a();
  const std::size_t k = own_samples.size();

  std::vector<BitString> strings;
  strings.reserve(choices);
  for (Symbol i = 1; i <= choices; ++i) {
    BitString s(k * static_cast<std::size_t>(h));
    for (std::size_t t = 0; t < k; ++t) {
      const RangeValue v = forward ? spec.g(own_samples[t], i)
                                   : spec.f(i, own_samples[t]);
      const BitString enc = encode_range_value(v, h);
      for (int bit = 0; bit < h; ++bit)
        s.set(t * static_cast<std::size_t>(h) + bit,
              enc.at(static_cast<std::size_t>(bit)));
    }
    strings.push_back(std::move(s));
  }
  return strings;
}

std::vector<Symbol> gsfc_expand_selection(std::span<const Symbol> samples,
                                          int h) {
  if (h < 1) throw ParamError("expansion factor must be >= 1");
  std::vector<Symbol> out;
  out.reserve(samples.size() * static_cast<std::size_t>(h));
  for (Symbol s : samples)
    for (int t = 0; t < h; ++t) out.push_back(s);
  return out;
}

namespace {

std::vector<RangeValue> decode_groups(std::span<const Bit> bits, std::size_t k,
                                      int h) {
  BitString s(std::vector<Bit>(bits.begin(), bits.end()));
  std::vector<RangeValue> out;
  out.reserve(k);
  for (std::size_t t = 0; t < k; ++t)
    out.push_back(decode_range_value(s, t * static_cast<std::size_t>(h), h));
  return out;
}

std::vector<RangeValue> derive_f_from_g(const FunctionSpec& spec) {
  constexpr RangeValue kUnset = ~RangeValue{0};
  std::vector<RangeValue> map(spec.g_range_size(), kUnset);
  for (Symbol a = 1; a <= spec.m_a(); ++a)
    for (Symbol b = 1; b <= spec.m_b(); ++b) {
      const RangeValue g = spec.g(a, b);
      const RangeValue f = spec.f(a, b);
      if (map[g] == kUnset)
        map[g] = f;
      else if (map[g] != f)
        throw ParamError("single-OT mode requires f to be determined by g");
    }
  for (auto& v : map)
    if (v == kUnset) v = 0;
  return map;
}

}  // namespace

GsfcProtocol::GsfcProtocol(GsfcConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.k < 1) throw ParamError("need k >= 1");
  const std::size_t fwd_bits = cfg_.k * static_cast<std::size_t>(cfg_.spec.h_b());
  const std::size_t rev_bits = cfg_.k * static_cast<std::size_t>(cfg_.spec.h_a());
  if (fwd_bits > 0 && cfg_.spec.m_b() < 2)
    throw ParamError("forward OT needs m_B >= 2");
  if (rev_bits > 0 && !cfg_.single_ot && cfg_.spec.m_a() < 2)
    throw ParamError("reverse OT needs m_A >= 2");
  if (fwd_bits > 0 && cfg_.n_forward == 0)
    throw ParamError("forward direction needs a sample budget");
  if (rev_bits > 0 && !cfg_.single_ot && cfg_.n_reverse == 0)
    throw ParamError("reverse direction needs a sample budget");
  if (cfg_.single_ot) f_from_g_ = derive_f_from_g(cfg_.spec);
}

ResourceDemand GsfcProtocol::resource_demand() const {
  const bool fwd = cfg_.k * cfg_.spec.h_b() > 0;
  const bool rev = cfg_.k * cfg_.spec.h_a() > 0 && !cfg_.single_ot;
  return {fwd ? cfg_.n_forward : 0, rev ? cfg_.n_reverse : 0};
}

void GsfcProtocol::execute(Session& session) const {
  const auto& a_samples = session.inputs_of(Party::alice);
  const auto& b_samples = session.inputs_of(Party::bob);
  const std::size_t k = cfg_.k;
  const int h_a = cfg_.spec.h_a();
  const int h_b = cfg_.spec.h_b();

  auto zero_estimates = [&] {
    session.set_f_estimate(std::vector<RangeValue>(k, 0));
    session.set_g_estimate(std::vector<RangeValue>(k, 0));
  };

  std::vector<RangeValue> g_est(k, 0);
  if (h_b > 0) {
    const auto strings =
        gsfc_build_strings(cfg_.spec, a_samples, TransferDirection::alice_to_bob);
    const BitMatrix matrix = BitMatrix::from_columns(strings);
    const auto selections = gsfc_expand_selection(b_samples, h_b);

    IndexPartition part = partition_indices(session.forward_y());
    OtPools pools{part.non_erased, part.erased};
    auto decoded = ot_exchange(
        session, Party::alice,
        SwotConfig(k * static_cast<std::size_t>(h_b), cfg_.spec.m_b(),
                   cfg_.n_forward),
        ResourceDir::forward, matrix, selections, pools);
    if (!decoded) {
      zero_estimates();
      return;
    }
    g_est = decode_groups(*decoded, k, h_b);
  }

  if (cfg_.single_ot) {
    // Bob derives Alice's values from his own output; the reply reveals only
    // what Alice is entitled to learn.
    std::vector<RangeValue> f_est(k, 0);
    if (h_a > 0) {
      BitString reply(k * static_cast<std::size_t>(h_a));
      for (std::size_t t = 0; t < k; ++t) {
        const BitString enc = encode_range_value(f_from_g_[g_est[t]], h_a);
        for (int bit = 0; bit < h_a; ++bit)
          reply.set(t * static_cast<std::size_t>(h_a) + bit,
                    enc.at(static_cast<std::size_t>(bit)));
      }
      session.send(Party::bob, EncodedStringsPayload{{reply}});
      const auto& received = std::get<EncodedStringsPayload>(
          session.messages().back().payload);
      std::vector<Bit> bits(received.strings.front().bits().begin(),
                            received.strings.front().bits().end());
      f_est = decode_groups(bits, k, h_a);
    }
    session.set_f_estimate(std::move(f_est));
    session.set_g_estimate(std::move(g_est));
    return;
  }

  std::vector<RangeValue> f_est(k, 0);
  if (h_a > 0) {
    const auto strings =
        gsfc_build_strings(cfg_.spec, b_samples, TransferDirection::bob_to_alice);
    const BitMatrix matrix = BitMatrix::from_columns(strings);
    const auto selections = gsfc_expand_selection(a_samples, h_a);

    IndexPartition part = partition_indices(session.reverse_y());
    OtPools pools{part.non_erased, part.erased};
    auto decoded = ot_exchange(
        session, Party::bob,
        SwotConfig(k * static_cast<std::size_t>(h_a), cfg_.spec.m_a(),
                   cfg_.n_reverse),
        ResourceDir::reverse, matrix, selections, pools);
    if (!decoded) {
      zero_estimates();
      return;
    }
    f_est = decode_groups(*decoded, k, h_a);
  }

  session.set_f_estimate(std::move(f_est));
  session.set_g_estimate(std::move(g_est));
}

SessionResult gsfc_full(const SourceSamples& inputs, ErasureSequence forward,
                        ErasureSequence reverse, const GsfcConfig& cfg,
                        RandomSource& alice_rng, RandomSource& bob_rng) {
  GsfcProtocol protocol(cfg);
  return run_session(protocol, inputs, std::move(forward), std::move(reverse),
                     alice_rng, bob_rng);
}

GsfcSizes gsfc_direction_sizes(double p, const FunctionSpec& spec,
                               std::size_t k, double slack, bool single_ot) {
  if (!(slack >= 0.0 && slack < 1.0))
    throw ParamError("slack must lie in [0,1)");
  GsfcSizes sizes;
  auto budget = [&](std::size_t bits, Symbol choices) -> std::size_t {
    if (bits == 0) return 0;
    const double rate = rate_swot(p, static_cast<int>(choices));
    if (rate == 0.0)
      throw ParamError("no finite sample budget at zero OT rate");
    return static_cast<std::size_t>(
        std::ceil(static_cast<double>(bits) / ((1.0 - slack) * rate)));
  };
  sizes.forward = budget(k * static_cast<std::size_t>(spec.h_b()), spec.m_b());
  sizes.reverse = single_ot ? 0
                            : budget(k * static_cast<std::size_t>(spec.h_a()),
                                     spec.m_a());
  return sizes;
}

FunctionSpec parse_function_table(std::istream& in) {
  std::size_t m_a = 0, m_b = 0, f_range = 0, g_range = 0;
  if (!(in >> m_a >> m_b >> f_range >> g_range))
    throw ParamError("table header must read: m_A m_B |Rf| |Rg|");
  if (m_a < 1 || m_b < 1 || f_range < 1 || g_range < 1)
    throw ParamError("table header values must be positive");
  const std::size_t cells = m_a * m_b;
  std::vector<RangeValue> f_table(cells, 0), g_table(cells, 0);
  std::vector<bool> seen(cells, false);
  for (std::size_t line = 0; line < cells; ++line) {
    std::size_t a = 0, b = 0;
    RangeValue f = 0, g = 0;
    if (!(in >> a >> b >> f >> g))
      throw ParamError("table body must hold m_A*m_B lines: a b f g");
    if (a < 1 || a > m_a || b < 1 || b > m_b)
      throw ParamError("table cell indices outside alphabets");
    const std::size_t idx = (a - 1) * m_b + (b - 1);
    if (seen[idx]) throw ParamError("duplicate table cell");
    seen[idx] = true;
    f_table[idx] = f;
    g_table[idx] = g;
  }
  return FunctionSpec(static_cast<Symbol>(m_a), static_cast<Symbol>(m_b),
                      static_cast<RangeValue>(f_range),
                      static_cast<RangeValue>(g_range), std::move(f_table),
                      std::move(g_table));
}

std::string format_function_table(const FunctionSpec& spec) {
  std::ostringstream os;
  os << spec.m_a() << " " << spec.m_b() << " " << spec.f_range_size() << " "
     << spec.g_range_size() << "\n";
  for (Symbol a = 1; a <= spec.m_a(); ++a)
    for (Symbol b = 1; b <= spec.m_b(); ++b)
      os << a << " " << b << " " << spec.f(a, b) << " " << spec.g(a, b)
         << "\n";
  return os.str();
}

}  // namespace otsfc
