#pragma once

#include <optional>

#include "otsfc/boot.hpp"
#include "otsfc/session.hpp"

namespace otsfc {

/// Which conditional-independence statement is being measured.
///   alice_secret: I(A^k ; Bob's view | B^k, G^k)
///   bob_secret:   I(B^k ; Alice's view | A^k, F^k)
///   disjoint:     I(string_i ; Bob's view | B, string_B), string OT only
enum class PrivacyForm { alice_secret, bob_secret, disjoint };

struct PrivacyAuditResult {
  /// Conditional mutual information in bits (KL form); tiny negatives are
  /// numerical noise and stay above -1e-12.
  double mi_bits = 0.0;
  /// The same quantity via entropy differences, as an internal cross-check.
  double mi_bits_entropy = 0.0;
  /// GF(2) recoverability: which whole strings Bob can reconstruct.
  std::vector<std::size_t> recoverable_units;
  /// Minimal-weight non-unit string combinations in Bob's span.
  std::vector<std::vector<std::size_t>> leak_witnesses;
};

/// One weighted point of the source distribution.
struct SourceAtom {
  double prob;
  SourceSamples sources;
};

/// All (A^k, B^k) combinations, uniformly weighted. Either side may be
/// pinned to a fixed realization; `constant_b` restricts Bob's side to
/// constant vectors (the string-OT source shape).
std::vector<SourceAtom> enumerate_sources(
    Symbol m_a, Symbol m_b, std::size_t k,
    const std::optional<std::vector<Symbol>>& fixed_a,
    const std::optional<std::vector<Symbol>>& fixed_b, bool constant_b);

struct MiAuditSetup {
  const Protocol* protocol = nullptr;
  std::vector<SourceAtom> source_dist;
  double p = 0.5;  // erasure probability of the sampled resources
  PrivacyForm form = PrivacyForm::alice_secret;
  Symbol disjoint_index = 1;
  std::size_t atom_cap = std::size_t{1} << 24;
};

/// Exact conditional mutual information by exhaustive enumeration of the
/// sources, the resource realizations and every branch of both parties'
/// randomness. The protocol runs unmodified; only its randomness source is
/// replaced by the enumerator.
PrivacyAuditResult audit_exact_mi(const MiAuditSetup& setup);

/// Structural disjoint-privacy audit: Gaussian elimination over GF(2) on
/// everything Bob holds after the bootstrapped protocol. recoverable_units
/// must come out as exactly {b}; leak_witnesses lists the minimal-weight
/// joint combinations that leak alongside.
PrivacyAuditResult audit_disjoint_gf2(const BootParams& params, Symbol b);

}  // namespace otsfc
