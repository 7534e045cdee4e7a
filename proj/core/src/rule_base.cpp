#include "egfc/rule_base.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace egfc {

namespace {

bool labels_compatible(const std::optional<int>& a, const std::optional<int>& b) {
  return !(a && b && *a != *b);
}

// (candidate) beats (incumbent)? Activation first, then update_count, then index.
bool wins_tie(double act_cand, const Granule& cand, std::size_t idx_cand,
              double act_inc, const Granule& inc, std::size_t idx_inc) {
  if (act_cand != act_inc) return act_cand > act_inc;
  if (cand.update_count != inc.update_count) return cand.update_count > inc.update_count;
  return idx_cand < idx_inc;
}

}  // namespace

double granule_distance(const Granule& g1, const Granule& g2) {
  if (g1.dim() != g2.dim()) throw std::invalid_argument("dimension mismatch");
  double sum = 0.0;
  for (std::size_t j = 0; j < g1.dim(); ++j) {
    const double s1 = g1.memberships[j].sigma;
    const double s2 = g2.memberships[j].sigma;
    // fixed operand order keeps the result bit-identical under argument swap
    sum += std::abs(g1.memberships[j].mu - g2.memberships[j].mu) +
           std::min(s1, s2) + std::max(s1, s2) - 2.0 * std::sqrt(s1 * s2);
  }
  return sum / static_cast<double>(g1.dim());
}

Granule merge_pair(const Granule& g1, const Granule& g2, std::uint64_t id) {
  if (g1.dim() != g2.dim()) throw std::invalid_argument("dimension mismatch");
  if (!labels_compatible(g1.label, g2.label))
    throw std::invalid_argument("merge refused: conflicting class labels");

  Granule out;
  out.id = id;
  out.memberships.reserve(g1.dim());
  for (std::size_t j = 0; j < g1.dim(); ++j) {
    const auto& a = g1.memberships[j];
    const auto& b = g2.memberships[j];
    const double w1 = a.sigma / b.sigma;
    const double w2 = b.sigma / a.sigma;
    const double mu = (w1 * a.mu + w2 * b.mu) / (w1 + w2);
    out.memberships.push_back({mu, clamp_sigma(a.sigma + b.sigma)});
  }
  out.label = g1.label ? g1.label : g2.label;
  out.update_count = g1.update_count + g2.update_count;
  out.inactivity = std::min(g1.inactivity, g2.inactivity);
  return out;
}

RuleBase::RuleBase(std::size_t dim, HyperParams params)
    : dim_(dim), params_(params), rho_(params.rho0) {
  if (dim == 0) throw std::invalid_argument("feature dimension must be positive");
  if (!(params.rho0 > 0.0 && params.rho0 <= 1.0))
    throw std::invalid_argument("rho0 must be in (0,1]");
  if (!(params.delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!(params.rho_min > 0.0 && params.rho_min <= params.rho_max && params.rho_max <= 1.0))
    throw std::invalid_argument("rho clamp bounds must satisfy 0 < rho_min <= rho_max <= 1");
}

ClassEstimate RuleBase::classify(std::span<const double> x) const {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
  ClassEstimate est;
  for (std::size_t i = 0; i < granules_.size(); ++i) {
    if (!granules_[i].label) continue;
    const double act = granule_activation(granules_[i], x);
    if (!est.winning_rule ||
        wins_tie(act, granules_[i], i, est.activation, granules_[*est.winning_rule],
                 *est.winning_rule)) {
      est.winning_rule = i;
      est.activation = act;
      est.label = granules_[i].label;
    }
  }
  return est;
}

std::optional<std::size_t> RuleBase::select_adaptation_rule(std::span<const double> x,
                                                            std::optional<int> y) const {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
  std::optional<std::size_t> best;
  double best_act = 0.0;
  for (std::size_t i = 0; i < granules_.size(); ++i) {
    const double act = granule_activation(granules_[i], x);
    if (!(act > rho_)) continue;
    if (y && !labels_compatible(granules_[i].label, y)) continue;
    if (!best || wins_tie(act, granules_[i], i, best_act, granules_[*best], *best)) {
      best = i;
      best_act = act;
    }
  }
  return best;
}

StepOutcome RuleBase::learn_step(std::span<const double> x, std::optional<int> y) {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite feature value");
  }

  StepOutcome out;
  const auto selected = select_adaptation_rule(x, y);

  if (!selected) {
    Granule g = create_granule(x, y, next_id_++);
    granules_.push_back(std::move(g));
    out.created = true;
    out.touched_granule = granules_.back().id;
    for (std::size_t i = 0; i + 1 < granules_.size(); ++i) granules_[i].inactivity++;
  } else {
    Granule& g = granules_[*selected];
    if (!g.label && y) {
      // Delayed class assignment: the first labeled sample that activates an
      // unlabeled rule defines its class.
      g.label = y;
      g.inactivity = 0;
      out.label_assigned = true;
    } else {
      absorb_sample(g, x);
      out.absorbed = true;
    }
    out.touched_granule = g.id;
    for (std::size_t i = 0; i < granules_.size(); ++i) {
      if (i != *selected) granules_[i].inactivity++;
    }
  }

  update_threshold();
  out.merged = maybe_merge();
  out.deletions = prune_inactive();
  ++step_;
  return out;
}

void RuleBase::update_threshold() {
  if (granules_.empty()) return;
  double sum = 0.0;
  for (const auto& g : granules_) {
    for (const auto& m : g.memberships) sum += m.sigma;
  }
  const double sigma_avg = sum / (static_cast<double>(granules_.size()) *
                                  static_cast<double>(dim_));
  if (sigma_avg_prev_) {
    rho_ = std::clamp(rho_ * sigma_avg / *sigma_avg_prev_, params_.rho_min,
                      params_.rho_max);
  }
  sigma_avg_prev_ = sigma_avg;
}

bool RuleBase::maybe_merge() {
  if (granules_.size() < 2) return false;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  double best_dist = 0.0;
  for (std::size_t i = 0; i < granules_.size(); ++i) {
    for (std::size_t j = i + 1; j < granules_.size(); ++j) {
      if (!labels_compatible(granules_[i].label, granules_[j].label)) continue;
      const double d = granule_distance(granules_[i], granules_[j]);
      if (!best || d < best_dist) {
        best = {i, j};
        best_dist = d;
      }
    }
  }
  if (!best || best_dist > params_.delta) return false;
  Granule merged = merge_pair(granules_[best->first], granules_[best->second], next_id_++);
  granules_[best->first] = std::move(merged);
  granules_.erase(granules_.begin() + static_cast<std::ptrdiff_t>(best->second));
  return true;
}

std::size_t RuleBase::prune_inactive() {
  if (params_.h_r == kNoHorizon) return 0;
  const std::size_t before = granules_.size();
  std::erase_if(granules_, [&](const Granule& g) { return g.inactivity >= params_.h_r; });
  return before - granules_.size();
}

std::uint64_t RuleBase::state_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  auto mix_double = [&](double v) {
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof v);
    std::memcpy(&bits, &v, sizeof bits);
    mix(bits);
  };
  mix(dim_);
  mix(step_);
  mix_double(rho_);
  mix(granules_.size());
  for (const auto& g : granules_) {
    mix(g.id);
    mix(g.label ? static_cast<std::uint64_t>(*g.label) + 1 : 0);
    mix(g.update_count);
    mix(g.inactivity);
    for (const auto& m : g.memberships) {
      mix_double(m.mu);
      mix_double(m.sigma);
    }
  }
  return h;
}

void RuleBase::seed_granule(Granule g) {
  if (g.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  g.id = next_id_++;
  granules_.push_back(std::move(g));
}

std::string to_json(const RuleBase& rb, int indent) {
  nlohmann::json j;
  j["format"] = "egfc-rulebase";
  j["version"] = 1;
  j["n"] = rb.dim_;
  j["step"] = rb.step_;
  j["rho"] = rb.rho_;
  if (rb.sigma_avg_prev_) {
    j["sigma_avg_prev"] = *rb.sigma_avg_prev_;
  } else {
    j["sigma_avg_prev"] = nullptr;
  }
  j["next_granule_id"] = rb.next_id_;
  auto& p = j["params"];
  p["rho0"] = rb.params_.rho0;
  p["delta"] = rb.params_.delta;
  if (rb.params_.h_r == kNoHorizon) {
    p["h_r"] = "inf";
  } else {
    p["h_r"] = rb.params_.h_r;
  }
  p["rho_min"] = rb.params_.rho_min;
  p["rho_max"] = rb.params_.rho_max;
  j["granules"] = nlohmann::json::array();
  for (const auto& g : rb.granules_) {
    nlohmann::json jg;
    jg["id"] = g.id;
    if (g.label) {
      jg["label"] = *g.label;
    } else {
      jg["label"] = nullptr;
    }
    jg["update_count"] = g.update_count;
    jg["inactivity"] = g.inactivity;
    auto& mu = jg["mu"];
    auto& sigma = jg["sigma"];
    for (const auto& m : g.memberships) {
      mu.push_back(m.mu);
      sigma.push_back(m.sigma);
    }
    j["granules"].push_back(std::move(jg));
  }
  return j.dump(indent);
}

RuleBase rule_base_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.value("format", "") != "egfc-rulebase")
    throw std::runtime_error("not an egfc rule-base snapshot");

  HyperParams params;
  const auto& p = j.at("params");
  params.rho0 = p.at("rho0").get<double>();
  params.delta = p.at("delta").get<double>();
  if (p.at("h_r").is_string()) {
    params.h_r = kNoHorizon;
  } else {
    params.h_r = p.at("h_r").get<std::uint64_t>();
  }
  params.rho_min = p.at("rho_min").get<double>();
  params.rho_max = p.at("rho_max").get<double>();

  RuleBase rb(j.at("n").get<std::size_t>(), params);
  rb.step_ = j.at("step").get<std::uint64_t>();
  rb.rho_ = j.at("rho").get<double>();
  if (!j.at("sigma_avg_prev").is_null())
    rb.sigma_avg_prev_ = j.at("sigma_avg_prev").get<double>();
  rb.next_id_ = j.at("next_granule_id").get<std::uint64_t>();
  for (const auto& jg : j.at("granules")) {
    Granule g;
    g.id = jg.at("id").get<std::uint64_t>();
    if (!jg.at("label").is_null()) g.label = jg.at("label").get<int>();
    g.update_count = jg.at("update_count").get<std::uint64_t>();
    g.inactivity = jg.at("inactivity").get<std::uint64_t>();
    const auto& mu = jg.at("mu");
    const auto& sigma = jg.at("sigma");
    if (mu.size() != rb.dim_ || sigma.size() != rb.dim_)
      throw std::runtime_error("granule dimension mismatch in snapshot");
    for (std::size_t k = 0; k < mu.size(); ++k) {
      g.memberships.push_back({mu[k].get<double>(), sigma[k].get<double>()});
    }
    rb.granules_.push_back(std::move(g));
  }
  return rb;
}

}  // namespace egfc
