#include <algorithm>

#include "g2count/genus2.hpp"
#include "g2count/modeq.hpp"

namespace g2c {

ModEqScreenedProvider::ModEqScreenedProvider(const std::filesystem::path& dir,
                                             std::shared_ptr<const KernelProvider> fallback)
    : fallback_(std::move(fallback)) {
  if (!std::filesystem::is_directory(dir)) fail(ErrorKind::Usage, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".modeq") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    ModEqData d = load_modeq_file(p);
    if (d.kind != ModEqKind::HilbertGundlach && d.norm != kIgusaNormTag)
      fail(ErrorKind::Validation, p.filename().string() + ": normalization '" + d.norm + "' differs from " + kIgusaNormTag);
    data_.push_back(std::move(d));
  }
}

void ModEqScreenedProvider::note(std::string s) const {
  std::lock_guard<std::mutex> lock(mu_);
  notes_.push_back(std::move(s));
}

std::vector<std::string> ModEqScreenedProvider::notes() const {
  std::lock_guard<std::mutex> lock(mu_);
  return notes_;
}

std::optional<std::size_t> ModEqScreenedProvider::roots_at(const Curve& odd_curve, const ModEqData& d) const {
  const auto inv = igusa_invariants(odd_curve);
  if (!inv.j1 || !inv.j2 || !inv.j3) return std::nullopt;
  try {
    const auto e = evaluate_at(d, odd_curve.field, {*inv.j1, *inv.j2, *inv.j3});
    const auto iso = isogenous_invariants(e);
    return iso.tuples.size() + iso.degenerate.size();
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::DenominatorVanishes) return std::nullopt;
    throw;
  }
}

std::vector<StableKernel> ModEqScreenedProvider::siegel_kernels(const Curve& odd_curve, std::int64_t ell,
                                                                std::size_t max_count) const {
  for (const auto& d : data_) {
    if (d.kind != ModEqKind::SiegelIgusa || d.level.ell != ell) continue;
    const auto roots = roots_at(odd_curve, d);
    if (!roots) {
      note("l=" + std::to_string(ell) + " siegel: not screened (singular point)");
      break;
    }
    note("l=" + std::to_string(ell) + " siegel: " + std::to_string(*roots) + " roots");
    if (*roots == 0) return {};
    break;
  }
  return fallback_->siegel_kernels(odd_curve, ell, max_count);
}

std::vector<StableKernel> ModEqScreenedProvider::hilbert_kernels(const Curve& odd_curve, std::int64_t ell,
                                                                 std::size_t max_count) const {
  // Screening needs both primes above l: a line may lie over either one.
  std::map<std::int64_t, std::vector<const ModEqData*>> by_disc;
  for (const auto& d : data_)
    if (d.kind == ModEqKind::HilbertIgusa && d.level.ell == ell) by_disc[d.level.disc].push_back(&d);
  for (const auto& [disc, files] : by_disc) {
    const auto F = RealQuadField::make(disc);
    const auto betas = split_prime(F, ell);
    auto has = [&](const RQElem& beta) {
      // Same prime ideal iff w has the same image modulo both generators.
      return std::any_of(files.begin(), files.end(), [&](const ModEqData* d) {
        return omega_residue(*d->level.beta, ell) == omega_residue(beta, ell);
      });
    };
    const bool both = betas && has(betas->first) && has(betas->second);
    if (!both) continue;
    std::size_t total = 0;
    bool screened = true;
    for (const ModEqData* d : files) {
      const auto r = roots_at(odd_curve, *d);
      if (!r) screened = false;
      else total += *r;
    }
    if (!screened) {
      note("l=" + std::to_string(ell) + " hilbert: not screened (singular point)");
      break;
    }
    note("l=" + std::to_string(ell) + " hilbert: " + std::to_string(total) + " roots");
    if (total == 0) return {};
    break;
  }
  return fallback_->hilbert_kernels(odd_curve, ell, max_count);
}

}  // namespace g2c
