#include "otsfc/swot.hpp"

#include <algorithm>

namespace otsfc {

std::optional<SelectionMatrix> swot_bob_build_selection(
    const IndexPartition& partition, std::span<const Symbol> b_samples,
    const SwotConfig& cfg, RandomSource& rng) {
  if (b_samples.size() != cfg.k)
    throw DimensionError("selection vector length must equal k");
  for (Symbol b : b_samples)
    if (b < 1 || b > cfg.m) throw DomainError("selection outside {1..m}");

  const std::size_t concealed = cfg.k * (cfg.m - 1);
  if (cfg.k > partition.non_erased.size() ||
      concealed > partition.erased.size())
    return std::nullopt;

  SelectionMatrix u;
  u.rows = cfg.k;
  u.cols = cfg.m;
  u.entries.assign(cfg.k * cfg.m, 0);

  const auto selected = draw_without_replacement(partition.non_erased, cfg.k, rng);
  for (std::size_t i = 0; i < cfg.k; ++i)
    u.entries[i * cfg.m + (b_samples[i] - 1)] = selected[i];

  if (cfg.concealed_with_replacement) {
    for (std::size_t i = 0; i < cfg.k; ++i)
      for (std::size_t j = 0; j < cfg.m; ++j) {
        if (j + 1 == b_samples[i]) continue;
        const auto pick = rng.uniform_index(
            static_cast<std::uint32_t>(partition.erased.size()));
        u.entries[i * cfg.m + j] = partition.erased[pick];
      }
  } else {
    const auto pads = draw_without_replacement(partition.erased, concealed, rng);
    std::size_t next = 0;
    for (std::size_t i = 0; i < cfg.k; ++i)
      for (std::size_t j = 0; j < cfg.m; ++j) {
        if (j + 1 == b_samples[i]) continue;
        u.entries[i * cfg.m + j] = pads[next++];
      }
  }
  return u;
}

BitMatrix swot_alice_encrypt(const BitMatrix& a_matrix,
                             const SelectionMatrix& u,
                             std::span<const std::uint8_t> x) {
  if (u.rows != a_matrix.rows() || u.cols != a_matrix.cols())
    throw DimensionError("selection matrix shape must match secret matrix");
  BitMatrix c(a_matrix.rows(), a_matrix.cols());
  for (std::size_t i = 1; i <= u.rows; ++i)
    for (std::size_t j = 1; j <= u.cols; ++j) {
      const std::uint32_t idx = u.at(i, j);
      if (idx < 1 || idx > x.size())
        throw IndexError("selection entry outside resource range");
      c.set(i, j, a_matrix.at(i, j) ^ x[idx - 1]);
    }
  return c;
}

std::vector<Bit> swot_bob_decode(const BitMatrix& c, const SelectionMatrix& u,
                                 std::span<const ErasedBit> y,
                                 std::span<const Symbol> b_samples) {
  if (u.rows != c.rows() || u.cols != c.cols())
    throw DimensionError("selection matrix shape must match cipher matrix");
  if (b_samples.size() != u.rows)
    throw DimensionError("selection vector length must equal k");
  std::vector<Bit> out;
  out.reserve(u.rows);
  for (std::size_t i = 1; i <= u.rows; ++i) {
    const std::uint32_t idx = u.at(i, b_samples[i - 1]);
    if (idx < 1 || idx > y.size())
      throw IndexError("selection entry outside resource range");
    if (is_erased(y[idx - 1]))
      throw Error("selected position maps to an erased symbol");
    out.push_back(
        static_cast<Bit>(c.at(i, b_samples[i - 1]) ^ bit_value(y[idx - 1])));
  }
  return out;
}

std::optional<std::vector<Bit>> ot_exchange(Session& session, Party sender,
                                            const SwotConfig& cfg,
                                            ResourceDir dir,
                                            const BitMatrix& sender_matrix,
                                            std::span<const Symbol> selections,
                                            OtPools& pools) {
  const Party receiver = other(sender);
  IndexPartition part;
  part.non_erased = pools.non_erased;
  part.erased = pools.erased;

  auto u = swot_bob_build_selection(part, selections, cfg,
                                    session.rng_of(receiver));
  if (!u) {
    session.send_abort(receiver);
    return std::nullopt;
  }
  session.send(receiver, *u);

  std::vector<std::uint32_t> used(u->entries);
  std::sort(used.begin(), used.end());
  auto strip = [&](std::vector<std::uint32_t>& pool) {
    std::erase_if(pool, [&](std::uint32_t v) {
      return std::binary_search(used.begin(), used.end(), v);
    });
  };
  strip(pools.non_erased);
  strip(pools.erased);

  const auto& x = dir == ResourceDir::forward ? session.forward_x()
                                              : session.reverse_x();
  const auto& y = dir == ResourceDir::forward ? session.forward_y()
                                              : session.reverse_y();
  BitMatrix c = swot_alice_encrypt(sender_matrix, *u, x);
  session.send(sender, CipherMatrixPayload{c});

  return swot_bob_decode(c, *u, y, selections);
}

void SwotProtocol::execute(Session& session) const {
  const auto& a_samples = session.inputs_of(Party::alice);
  const auto& b_samples = session.inputs_of(Party::bob);

  BitMatrix a_matrix(cfg_.k, cfg_.m);
  for (std::size_t i = 0; i < cfg_.k; ++i)
    for (std::size_t j = 1; j <= cfg_.m; ++j)
      a_matrix.set(i + 1, j,
                   FunctionSpec::tuple_bit(a_samples[i],
                                           static_cast<int>(cfg_.m),
                                           static_cast<int>(j)));

  IndexPartition part = partition_indices(session.forward_y());
  OtPools pools{part.non_erased, part.erased};

  auto decoded = ot_exchange(session, Party::alice, cfg_, ResourceDir::forward,
                             a_matrix, b_samples, pools);

  // Alice's function is constant 0; on abort the receiver's estimate is all
  // zeros as well.
  session.set_f_estimate(std::vector<RangeValue>(cfg_.k, 0));
  if (decoded) {
    session.set_g_estimate(
        std::vector<RangeValue>(decoded->begin(), decoded->end()));
  } else {
    session.set_g_estimate(std::vector<RangeValue>(cfg_.k, 0));
  }
}

SessionResult swot_full(const SourceSamples& inputs, ErasureSequence resource,
                        const SwotConfig& cfg, RandomSource& alice_rng,
                        RandomSource& bob_rng) {
  SwotProtocol protocol(cfg);
  return run_session(protocol, inputs, std::move(resource), alice_rng, bob_rng);
}

}  // namespace otsfc
