#include "core/tables.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace coh {

namespace {

size_t utf8_len(const std::string& s) {
  size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string pad(const std::string& s, size_t width) {
  std::string out = s;
  for (size_t i = utf8_len(s); i < width; ++i) out += ' ';
  return out;
}

// the anisotropic block as one factor: the trivial or sgn character of
// GL_{n_0}(R) resp. GL_{k_0}(H), with the global det twist folded in
std::string scalar_label(GroupKind kind, int k0, long long w, int eps) {
  const Rat s = -half(w);
  if (kind.is_split()) {
    if (s == Rat(0)) return eps ? "sgn" : "1_{GL_" + std::to_string(2 * k0) + "(R)}";
    return std::string(eps ? "sgn" : "") + "|det|^" + s.str();
  }
  if (s == Rat(0)) return "1_{GL_" + std::to_string(k0) + "(H)}";
  return "det'^" + s.str();
}

}  // namespace

std::string langlands_label(GroupKind kind, const OrderedPartition& partition,
                            const SelfDualData& sd, int eps) {
  const InductionDatum d = langlands_data_for(kind, partition, sd, eps);
  const OrderedPartition kp = rank_partition(partition, kind);
  const char letter = kind.is_split() ? 'D' : 'F';

  if (d.blocks.empty()) return scalar_label(kind, kp.k0(), d.w, d.e_lambda);

  std::string factors;
  for (const ComplexBlock& b : d.blocks) {
    if (!factors.empty()) factors += "⊗";
    factors += letter;
    factors += "(" + std::to_string(folded_u(d, b)) + "," + std::to_string(b.l) + ")";
  }
  if (kp.k0() > 0) {
    factors += "⊗";
    factors += scalar_label(kind, kp.k0(), d.w, d.e_lambda);
  }
  // irreducibly induced exactly when every nu-shift vanishes: singleton
  // complex blocks and at most one anisotropic GL_1-factor
  const bool all_singleton =
      std::all_of(d.blocks.begin(), d.blocks.end(), [](const ComplexBlock& b) { return b.u == 0; });
  if (all_singleton && kp.k0() <= 1) return "Ind[" + factors + "]";
  return "J(" + factors + ")";
}

std::string render_catalog_table(GroupKind kind, const Weight& mu) {
  const int n = kind.ambient_n();
  if (static_cast<int>(mu.size()) != n)
    fail(errc::invalid_input, "mu must have " + std::to_string(n) + " entries");

  std::ostringstream title;
  const bool mu_zero = std::all_of(mu.begin(), mu.end(), [](long long x) { return x == 0; });
  title << "Coh_" << (mu_zero ? "0" : "mu") << "(" << kind.str() << ")";
  if (!mu_zero) {
    title << ", mu=(";
    for (size_t i = 0; i < mu.size(); ++i) title << (i ? "," : "") << mu[i];
    title << ")";
  }

  std::ostringstream out;
  out << title.str() << "\n";
  if (!essentially_selfdual(mu)) {
    out << "  (empty: mu is not essentially self-dual)\n";
    return out.str();
  }
  const SelfDualData sd = selfdual_data(mu);

  // paper row order: canonical partitions lexicographically, each followed
  // by its equivalence partner when that partner is admissible too
  std::vector<OrderedPartition> rows;
  for (const OrderedPartition& p : enumerate_partitions(kind.rank_k())) {
    if (p.k0() == 1) continue;  // listed right after its canonical partner
    if (!is_admissible(sd, p)) continue;
    rows.push_back(p);
    if (auto partner = equivalent_partition(p); partner && is_admissible(sd, *partner))
      rows.push_back(*partner);
  }
  if (rows.empty()) {
    out << "  (empty: lambda is admissible for no partition)\n";
    return out.str();
  }

  std::vector<std::vector<std::string>> cells;
  const bool split = kind.is_split();
  for (const OrderedPartition& p : rows) {
    const OrderedPartition shown = split ? doubled(p) : p;
    std::vector<std::string> row{shown.str(), langlands_label(kind, shown, sd, 0)};
    if (split) row.push_back(langlands_label(kind, shown, sd, 1));
    cells.push_back(row);
  }

  std::vector<std::string> header{"partition",
                                  split ? "A_q(lambda)" : "A_q'(lambda)"};
  if (split) header.push_back("A_q(lambda)⊗sgn");
  std::vector<size_t> widths(header.size());
  for (size_t c = 0; c < header.size(); ++c) {
    widths[c] = utf8_len(header[c]);
    for (const auto& row : cells) widths[c] = std::max(widths[c], utf8_len(row[c]));
  }

  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) line += "  " + pad(row[c], widths[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  return out.str();
}

std::string render_tables(int k, const Weight& mu) {
  return render_catalog_table(GroupKind::split_real(2 * k), mu) + "\n" +
         render_catalog_table(GroupKind::quaternionic(k), mu);
}

}  // namespace coh
