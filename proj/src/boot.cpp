#include "otsfc/boot.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "otsfc/rates.hpp"

namespace otsfc {

EncodingAssignment boot_assign(const BootParams& params) {
  EncodingAssignment assignment;
  assignment.radices = params.branching;
  assignment.digits.reserve(params.m);
  for (std::size_t j = 0; j < params.m; ++j) {
    std::vector<Symbol> digits(params.levels());
    std::size_t v = j;
    for (std::size_t level = params.levels(); level-- > 0;) {
      digits[level] = static_cast<Symbol>(v % params.branching[level] + 1);
      v /= params.branching[level];
    }
    assignment.digits.push_back(std::move(digits));
  }
  return assignment;
}

MaskTable boot_generate_masks(const BootParams& params, RandomSource& rng) {
  MaskTable table;
  table.masks.resize(params.levels());
  for (std::size_t i = 0; i < params.levels(); ++i) {
    table.masks[i].reserve(params.branching[i]);
    for (std::size_t j = 0; j < params.branching[i]; ++j) {
      BitString mask(params.k);
      for (std::size_t t = 0; t < params.k; ++t) mask.set(t, rng.bit());
      table.masks[i].push_back(std::move(mask));
    }
  }
  return table;
}

std::vector<BitString> boot_encode(const std::vector<BitString>& a_strings,
                                   const MaskTable& masks,
                                   const EncodingAssignment& assignment) {
  if (a_strings.size() != assignment.digits.size())
    throw DimensionError("string count must match assignment");
  std::vector<BitString> ciphers;
  ciphers.reserve(a_strings.size());
  for (std::size_t j = 1; j <= a_strings.size(); ++j) {
    BitString c = a_strings[j - 1];
    for (std::size_t level = 1; level <= assignment.radices.size(); ++level)
      c = c ^ masks.mask(level, assignment.digit(j, level));
    ciphers.push_back(std::move(c));
  }
  return ciphers;
}

KnowledgeSpan boot_knowledge_span(const EncodingAssignment& assignment,
                                  Symbol b) {
  const std::size_t m = assignment.digits.size();
  const std::size_t levels = assignment.radices.size();
  if (b < 1 || b > m) throw DomainError("selection outside {1..m}");

  std::size_t mask_vars = 0;
  std::vector<std::size_t> level_offset(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    level_offset[i] = mask_vars;
    mask_vars += assignment.radices[i];
  }
  if (mask_vars + m > 64)
    throw ParamError("knowledge span limited to 64 variables");

  // Columns: mask variables low, string variables high. One equation per
  // received cipher (string + its masks), one per mask Bob took via OT.
  std::vector<std::uint64_t> rows;
  for (std::size_t j = 1; j <= m; ++j) {
    std::uint64_t row = std::uint64_t{1} << (mask_vars + j - 1);
    for (std::size_t level = 1; level <= levels; ++level)
      row |= std::uint64_t{1}
             << (level_offset[level - 1] + assignment.digit(j, level) - 1);
    rows.push_back(row);
  }
  for (std::size_t level = 1; level <= levels; ++level)
    rows.push_back(std::uint64_t{1} << (level_offset[level - 1] +
                                        assignment.digit(b, level) - 1));

  KnowledgeSpan span;
  span.m = m;
  span.basis = gf2_rref(
      gf2_eliminate_low_columns(std::move(rows), static_cast<int>(mask_vars)));
  return span;
}

BootProtocol::BootProtocol(BootParams params,
                           std::vector<std::size_t> level_sizes,
                           BootResourceMode mode)
    : params_(std::move(params)),
      level_sizes_(std::move(level_sizes)),
      mode_(mode) {
  if (level_sizes_.size() != params_.levels())
    throw DimensionError("one sample budget per level required");
  total_n_ = std::accumulate(level_sizes_.begin(), level_sizes_.end(),
                             std::size_t{0});
  if (total_n_ < 1) throw ParamError("resource budget must be positive");
}

std::vector<BitString> strings_from_samples(std::span<const Symbol> a_samples,
                                            std::size_t m) {
  std::vector<BitString> strings(m, BitString(a_samples.size()));
  for (std::size_t i = 0; i < a_samples.size(); ++i)
    for (std::size_t j = 1; j <= m; ++j)
      strings[j - 1].set(i, FunctionSpec::tuple_bit(a_samples[i],
                                                    static_cast<int>(m),
                                                    static_cast<int>(j)));
  return strings;
}

SourceSamples string_ot_inputs(const std::vector<BitString>& strings,
                               Symbol b) {
  if (strings.empty()) throw ParamError("need at least one string");
  const std::size_t m = strings.size();
  const std::size_t k = strings.front().size();
  SourceSamples inputs;
  inputs.a_samples.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t value = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (strings[j].size() != k)
        throw DimensionError("strings must share one length");
      value = (value << 1) | strings[j].at(i);
    }
    inputs.a_samples.push_back(value + 1);
  }
  inputs.b_samples.assign(k, b);
  return inputs;
}

void BootProtocol::execute(Session& session) const {
  const auto& a_samples = session.inputs_of(Party::alice);
  const auto& b_samples = session.inputs_of(Party::bob);
  const std::size_t k = params_.k;

  for (Symbol b : b_samples)
    if (b != b_samples.front())
      throw DomainError("string OT requires a constant selection");
  const Symbol b = b_samples.front();
  if (b < 1 || b > params_.m) throw DomainError("selection outside {1..m}");

  // A single level is plain sample-wise OT on the strings themselves.
  if (params_.levels() == 1) {
    SwotProtocol(SwotConfig(k, params_.m, total_n_)).execute(session);
    return;
  }

  const EncodingAssignment assignment = boot_assign(params_);
  const auto strings = strings_from_samples(a_samples, params_.m);
  const MaskTable masks =
      boot_generate_masks(params_, session.rng_of(Party::alice));
  session.send(Party::alice,
               EncodedStringsPayload{boot_encode(strings, masks, assignment)});

  // Bob reads the encodings off the discussion channel.
  const auto& encoded = std::get<EncodedStringsPayload>(
      session.messages().back().payload);

  OtPools pooled;
  if (mode_ == BootResourceMode::pooled) {
    IndexPartition part = partition_indices(session.forward_y());
    pooled = OtPools{part.non_erased, part.erased};
  }

  std::vector<BitString> received_masks;
  std::size_t offset = 0;
  for (std::size_t level = 1; level <= params_.levels(); ++level) {
    const std::size_t s_i = params_.branching[level - 1];
    const std::size_t n_i = level_sizes_[level - 1];

    BitMatrix level_matrix(k, s_i);
    for (Symbol option = 1; option <= s_i; ++option)
      for (std::size_t t = 0; t < k; ++t)
        level_matrix.set(t + 1, option, masks.mask(level, option).at(t));

    OtPools slice_pools;
    OtPools* pools = &pooled;
    std::size_t level_n = total_n_;
    if (mode_ == BootResourceMode::fresh) {
      const auto& y = session.forward_y();
      IndexPartition part = partition_indices(
          std::span<const ErasedBit>(y).subspan(offset, n_i));
      for (auto& idx : part.non_erased) idx += static_cast<std::uint32_t>(offset);
      for (auto& idx : part.erased) idx += static_cast<std::uint32_t>(offset);
      slice_pools = OtPools{part.non_erased, part.erased};
      pools = &slice_pools;
      level_n = n_i;
    }

    const std::vector<Symbol> level_selection(k, assignment.digit(b, level));
    auto decoded =
        ot_exchange(session, Party::alice, SwotConfig(k, s_i, level_n),
                    ResourceDir::forward, level_matrix, level_selection,
                    *pools);
    if (!decoded) {
      session.set_f_estimate(std::vector<RangeValue>(k, 0));
      session.set_g_estimate(std::vector<RangeValue>(k, 0));
      return;
    }
    received_masks.emplace_back(std::vector<Bit>(decoded->begin(),
                                                 decoded->end()));
    offset += n_i;
  }

  BitString recovered = encoded.strings[b - 1];
  for (const auto& mask : received_masks) recovered = recovered ^ mask;

  session.set_f_estimate(std::vector<RangeValue>(k, 0));
  std::vector<RangeValue> g_est;
  g_est.reserve(k);
  for (std::size_t t = 0; t < k; ++t) g_est.push_back(recovered.at(t));
  session.set_g_estimate(std::move(g_est));
}

std::vector<std::size_t> boot_level_sizes(double p, const BootParams& params,
                                          double slack) {
  if (!(slack >= 0.0 && slack < 1.0))
    throw ParamError("slack must lie in [0,1)");
  std::vector<std::size_t> sizes;
  sizes.reserve(params.levels());
  for (std::size_t s : params.branching) {
    const double rate = rate_swot(p, static_cast<int>(s));
    if (rate == 0.0)
      throw ParamError("no finite sample budget at zero per-level rate");
    const double n_i = static_cast<double>(params.k) / ((1.0 - slack) * rate);
    sizes.push_back(static_cast<std::size_t>(std::ceil(n_i)));
  }
  return sizes;
}

std::vector<std::size_t> boot_split_total(double p, const BootParams& params,
                                          std::size_t total_n) {
  std::vector<double> weights;
  double weight_sum = 0.0;
  for (std::size_t s : params.branching) {
    const double rate = rate_swot(p, static_cast<int>(s));
    const double w = rate > 0.0 ? 1.0 / rate : 1.0;
    weights.push_back(w);
    weight_sum += w;
  }
  std::vector<std::size_t> sizes(params.levels());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double exact = static_cast<double>(total_n) * weights[i] / weight_sum;
    sizes[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += sizes[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t r = 0; assigned < total_n; ++r, ++assigned)
    ++sizes[remainders[r % remainders.size()].second];
  return sizes;
}

}  // namespace otsfc
