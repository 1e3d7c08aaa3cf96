#include "wigner/commands.hpp"

#include "wigner/combinatorics.hpp"
#include "wigner/measure.hpp"
#include "wigner/montecarlo.hpp"
#include "wigner/series.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace wigner::cli {

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_cell(const json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_null()) return "";
  if (cell.is_number_float()) return format_double(cell.get<double>());
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  return cell.dump();
}

// Index of the first nonzero coefficient of a - b, if any.
std::optional<unsigned> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  return (a - b).first_nonzero();
}

CheckResult series_check(std::string name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  CheckResult r{std::move(name), true, "order " + std::to_string(lhs.order())};
  if (auto i = first_mismatch(lhs, rhs)) {
    r.passed = false;
    r.detail = "first failing coefficient x^" + std::to_string(*i);
  }
  return r;
}

// Bell numbers by the Bell triangle; canonical words of length k are set
// partitions of the k positions.
Integer bell_number(unsigned k) {
  std::vector<Integer> row{1};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::vector<EnsembleParams> builtin_param_sets() {
  return {
      EnsembleParams::goe(),
      EnsembleParams::gue(),
      EnsembleParams::rademacher(1, 1),
      {1, Rational(3, 2), Rational(1, 3), Rational(7, 2)},
      {0, 2, 5, 9},
  };
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  if (kmax == 0) throw std::invalid_argument("kmax must be >= 1");
  for (auto n : ns)
    if (n == 0) throw std::invalid_argument("matrix sizes n must be >= 1");
  if (order == 0) throw std::invalid_argument("series order must be >= 1");
}

json RunConfig::echo() const {
  json j;
  j["ensemble"] = std::string(to_string(ensemble));
  j["r"] = params.r;
  j["sigma2"] = params.sigma2.get_str();
  j["s2"] = params.s2.get_str();
  j["alpha"] = params.alpha.get_str();
  j["kmax"] = kmax;
  j["n"] = ns;
  j["samples"] = samples;
  j["seed"] = seed;
  j["format"] = format == OutputFormat::csv ? "csv" : "json";
  j["out"] = out;
  j["order"] = order;
  return j;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  const auto dot = text.find('.');
  if (dot != std::string::npos && text.find('/') == std::string::npos) {
    // Decimal literal: exact value of the written digits.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto scale = text.size() - dot - 1;
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Integer num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("not a number: '" + text + "'");
    q = Rational(num, den);
  } else if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

EnsembleParams resolve_params(Preset preset, const ParamOverrides& o) {
  EnsembleParams p = EnsembleParams::for_preset(preset);
  const bool any = o.r || o.sigma2 || o.s2 || o.alpha;
  switch (preset) {
    case Preset::goe:
    case Preset::gue:
      if (any)
        throw std::invalid_argument(std::string(to_string(preset)) +
                                    " fixes (r, sigma2, s2, alpha); use --ensemble custom to set them");
      return p;
    case Preset::rademacher:
      if (o.r || o.alpha)
        throw std::invalid_argument("rademacher fixes r = 1 and alpha = sigma2^2; only --sigma2 and --s2 apply");
      return EnsembleParams::rademacher(o.sigma2 ? parse_rational(*o.sigma2) : Rational(1),
                                        o.s2 ? parse_rational(*o.s2) : Rational(1));
    case Preset::custom:
      break;
  }
  if (o.r) p.r = *o.r;
  if (o.sigma2) p.sigma2 = parse_rational(*o.sigma2);
  if (o.s2) p.s2 = parse_rational(*o.s2);
  if (o.alpha) p.alpha = parse_rational(*o.alpha);
  return p;
}

void write_table(std::ostream& os, const Table& table, const RunConfig& config) {
  if (config.format == OutputFormat::json) {
    json doc;
    doc["config"] = config.echo();
    json rows = json::array();
    for (const auto& row : table.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) obj[table.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["summary"] = table.summary;
    os << doc.dump(2) << '\n';
    return;
  }
  os << "# config " << config.echo().dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
  for (const auto& [key, value] : table.summary.items()) os << "# " << key << ',' << csv_cell(value) << '\n';
}

Table moments_table(const RunConfig& config) {
  config.validate();
  Table t;
  t.columns = {"k", "sc", "nu", "nu_decimal"};
  for (auto n : config.ns) {
    t.columns.push_back("expansion_n" + std::to_string(n));
    t.columns.push_back("expansion_n" + std::to_string(n) + "_decimal");
  }
  for (unsigned k = 0; k <= config.kmax; ++k) {
    const Rational nu = nu_moment(k, config.params);
    std::vector<json> row{k, semicircle_moment(k).get_str(), to_fraction_string(nu), to_double(nu)};
    for (auto n : config.ns) {
      const Rational m = expected_moment_expansion(k, n, config.params);
      row.emplace_back(to_fraction_string(m));
      row.emplace_back(to_double(m));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<CheckResult> run_identity_suite(const CheckOptions& options) {
  const unsigned order = options.order;
  if (order < 2) throw std::invalid_argument("identity suite needs series order >= 2");
  std::vector<CheckResult> out;

  // Catalan series identities, on a possibly perturbed T.
  TruncatedSeries t = catalan_series(order);
  if (options.perturb_catalan) {
    const unsigned i = *options.perturb_catalan;
    if (i > order) throw std::invalid_argument("perturbed Catalan index exceeds series order");
    t = t.with_coeff(i, t[i] + 1);
  }
  const auto one = TruncatedSeries::constant(1, order);
  const auto x = TruncatedSeries::monomial(1, order);
  const auto xt2 = x * t * t;
  out.push_back(series_check("T = 1 + x T^2", t, one + xt2));
  out.push_back(series_check("T (1 - x T) = 1", t * (one - x * t), one));
  {
    const unsigned o1 = order - 1;
    const auto lhs = t.derivative() * (one - xt2).truncated(o1);
    out.push_back(series_check("T' (1 - x T^2) = T^3", lhs, pow(t, 3).truncated(o1)));
  }
  {
    const auto inv = one / (one - xt2);
    const auto t5 = pow(t, 5);
    const auto rhs = Rational(2) * t5 * inv * inv + Rational(2) * t5 * inv * inv * inv;
    const unsigned o2 = order - 2;
    out.push_back(series_check("T'' = 2T^5/(1-xT^2)^2 + 2T^5/(1-xT^2)^3", t.derivative().derivative(),
                               rhs.truncated(o2)));
  }
  out.push_back(series_check("GUE cancellation -xT^4/D^2 + 2x^3T^7/D^2 + 2x^2T^5/D + xT^3/D = 0",
                             cancellation_combination(t, {-1, 2, 2, 1}), TruncatedSeries(order)));

  // Coefficient identities per parameter set.
  auto param_sets = builtin_param_sets();
  param_sets.insert(param_sets.end(), options.params.begin(), options.params.end());
  for (const auto& p : param_sets) {
    p.validate();
    const std::string tag = " [" + describe(p) + "]";
    const auto comps = s_components(order, p);
    const auto total = s_total(order, p);
    out.push_back(series_check("S1 + S2 + S3 + S4 = S" + tag, comps.s1 + comps.s2 + comps.s3 + comps.s4, total));

    CheckResult terms{"S_i coefficients = term_i" + tag, true, "l <= " + std::to_string(order)};
    CheckResult three_way{"order-1/n total = coeff S = nu moment" + tag, true, "l <= " + std::to_string(order)};
    for (unsigned l = 0; l <= order; ++l) {
      const auto e = order_one_coeff(l, p);
      if (terms.passed && (comps.s1[l] != e.c1 || comps.s2[l] != e.c2 || comps.s3[l] != e.c3 || comps.s4[l] != e.c4)) {
        terms.passed = false;
        terms.detail = "first failing coefficient l=" + std::to_string(l);
      }
      if (three_way.passed && (e.total != total[l] || e.total != nu_moment(2 * l, p))) {
        three_way.passed = false;
        three_way.detail = "first failing coefficient l=" + std::to_string(l);
      }
    }
    out.push_back(std::move(terms));
    out.push_back(std::move(three_way));
  }

  {
    CheckResult gue{"GUE correction vanishes", true, "l <= " + std::to_string(order)};
    CheckResult goe{"GOE correction = (4^l - C(2l,l))/2", true, "l <= " + std::to_string(order)};
    for (unsigned l = 0; l <= order; ++l) {
      if (gue.passed && nu_moment(2 * l, EnsembleParams::gue()) != 0) {
        gue.passed = false;
        gue.detail = "first failing coefficient l=" + std::to_string(l);
      }
      Integer four_l;
      mpz_ui_pow_ui(four_l.get_mpz_t(), 4, l);
      if (goe.passed && nu_moment(2 * l, EnsembleParams::goe()) != Rational(four_l - binomial(2 * l, l)) / 2) {
        goe.passed = false;
        goe.detail = "first failing coefficient l=" + std::to_string(l);
      }
    }
    out.push_back(std::move(gue));
    out.push_back(std::move(goe));
  }

  // Enumeration against the closed-form class counts.
  for (unsigned k = 2; k <= options.max_walk_length && k <= kMaxWalkLength; k += 2) {
    const unsigned l = k / 2;
    const ClassCensus census(k);
    struct Expect {
      const char* name;
      unsigned v, e;
      std::optional<CycleType> type;
      Integer value;
    };
    const std::vector<Expect> expects{
        {"trees", l + 1, l, std::nullopt, catalan(l)},
        {"four-visit trees", l, l - 1, std::nullopt, count_four_visit_trees(l)},
        {"self-loop", l, l, CycleType::self_loop, count_self_loop_walks(l)},
        {"one-way cycles", l, l, CycleType::cycle_one_way, count_one_way_cycle_walks(l)},
        {"both-way cycles", l, l, CycleType::cycle_both_ways, count_both_way_cycle_walks(l)},
    };
    for (const auto& ex : expects) {
      const Integer got = census.count(ex.v, ex.e, ex.type);
      CheckResult r{"class count k=" + std::to_string(k) + " " + ex.name, got == ex.value,
                    "enumerated " + got.get_str() + ", formula " + ex.value.get_str()};
      out.push_back(std::move(r));
    }
    Integer sum;
    for (const auto& [key, n] : census.table()) sum += n;
    const Integer bell = bell_number(k);
    out.push_back({"class counts partition k=" + std::to_string(k), sum == bell && census.total() == bell,
                   "total " + sum.get_str() + ", Bell number " + bell.get_str()});
  }
  return out;
}

Table check_table(const std::vector<CheckResult>& results) {
  Table t;
  t.columns = {"identity", "status", "detail"};
  std::size_t failed = 0;
  for (const auto& r : results) {
    t.rows.push_back({r.name, r.passed ? "pass" : "FAIL", r.detail});
    if (!r.passed) ++failed;
  }
  t.summary["checks"] = results.size();
  t.summary["failed"] = failed;
  return t;
}

Table enumerate_table(unsigned k, const EnumerateFilter& filter, const MomentModel& model) {
  if (k == 0 || k > kMaxWalkLength)
    throw std::invalid_argument("enumerate supports 1 <= k <= " + std::to_string(kMaxWalkLength) + " (got " +
                                std::to_string(k) + "); class counts grow like the Bell numbers");
  Table t;
  t.columns = {"word", "v", "e", "cycle_type", "expectation_num", "expectation_den"};
  std::map<std::string, unsigned long> counts;
  unsigned long total = 0;
  for_each_canonical_word(k, [&](std::span<const unsigned> w) {
    const auto c = classify_walk(w);
    ++total;
    ++counts["v=" + std::to_string(c.v) + ";e=" + std::to_string(c.e) + ";" + std::string(to_string(c.cycle_type))];
    if (filter.v && *filter.v != c.v) return;
    if (filter.e && *filter.e != c.e) return;
    if (filter.cycle_type && *filter.cycle_type != c.cycle_type) return;
    const Rational ew = expected_word_product(c, model);
    t.rows.push_back({format_word(c.canonical_word), c.v, c.e, std::string(to_string(c.cycle_type)),
                      ew.get_num().get_str(), ew.get_den().get_str()});
  });
  t.summary["total_classes"] = total;
  t.summary["listed"] = t.rows.size();
  for (const auto& [key, n] : counts) t.summary["count " + key] = n;
  return t;
}

Table mc_table(const RunConfig& config) {
  config.validate();
  if (config.ns.empty()) throw std::invalid_argument("mc needs at least one --n");
  if (config.samples < 100) throw std::invalid_argument("mc needs --samples >= 100");
  const EnsembleSampler sampler(config.ensemble, config.params);
  const unsigned oracle_kmax = std::min(config.kmax, kMaxWalkLength);
  const auto model = MomentModel::for_preset(config.ensemble, config.params, oracle_kmax);

  std::map<unsigned long, MomentSamples> runs;
  auto run_for = [&](unsigned long n) -> const MomentSamples& {
    auto it = runs.find(n);
    if (it == runs.end())
      it = runs.emplace(n, sample_moments(static_cast<unsigned>(n), config.kmax, config.samples, sampler, config.seed,
                                          config.threads))
               .first;
    return it->second;
  };

  Table t;
  t.columns = {"kind", "k", "n", "samples", "point", "stderr", "reference", "z_score", "oracle_target",
               "z_oracle"};
  for (auto n : config.ns) {
    const auto& coarse_run = run_for(n);
    const auto& fine_run = run_for(2 * n);
    for (unsigned k = 1; k <= config.kmax; ++k) {
      const auto est = correction_from_samples(coarse_run, k, config.params);
      std::vector<json> row{"estimate", k, n, est.samples, est.point, est.std_error, est.reference, est.z_score()};
      if (k % 2 == 0 && k <= oracle_kmax) {
        const Rational target =
            Rational(Integer(n)) * (exact_moment(k, n, model) - Rational(semicircle_moment(k)));
        row.emplace_back(to_double(target));
        row.emplace_back(est.z_score(to_double(target)));
      } else {
        row.emplace_back(nullptr);
        row.emplace_back(nullptr);
      }
      t.rows.push_back(std::move(row));

      const auto rich = richardson_from_estimates(est, correction_from_samples(fine_run, k, config.params));
      t.rows.push_back({"richardson", k, n, est.samples, rich.point, rich.std_error, rich.reference, rich.z_score(),
                        nullptr, nullptr});
    }
  }
  return t;
}

Table density_table(const RunConfig& config, unsigned points) {
  config.validate();
  if (points < 1) throw std::invalid_argument("density needs --points >= 1");
  const SignedMeasureNu nu(config.params);
  Table t;
  t.columns = {"x", "semicircle", "nu_density"};
  // Open interval (-2, 2): nodes at cell midpoints.
  for (unsigned i = 0; i < points; ++i) {
    const double x = -2.0 + 4.0 * (i + 0.5) / points;
    t.rows.push_back({x, semicircle_density(x), nu.density(x)});
  }
  t.summary["atom_mass_at_plus_2"] = nu.atom_mass();
  t.summary["atom_mass_at_minus_2"] = nu.atom_mass();
  return t;
}

Table stieltjes_table(const RunConfig& config, double radius, unsigned points) {
  config.validate();
  if (points < 1) throw std::invalid_argument("stieltjes needs --points >= 1");
  if (!(radius > 2.0)) throw std::invalid_argument("stieltjes radius must exceed 2 (branch cut [-2, 2])");
  Table t;
  t.columns = {"re_z", "im_z", "h_re", "h_im", "nu_re", "nu_im"};
  for (unsigned i = 0; i < points; ++i) {
    const double phi = 2.0 * kPi * i / points;
    const Complex z = std::polar(radius, phi);
    const Complex h = semicircle_stieltjes(z);
    const Complex g = nu_stieltjes(z, config.params);
    t.rows.push_back({z.real(), z.imag(), h.real(), h.imag(), g.real(), g.imag()});
  }
  return t;
}

}  // namespace wigner::cli
