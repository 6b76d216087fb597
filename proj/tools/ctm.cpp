#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ctm/ctm.hpp"

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Comma-separated integers; the empty string is the empty list.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    std::string token =
        trim(comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("bad integer '" + token + "' in list '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_payload(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + output_path + "'");
  f << payload;
}

struct CommonArgs {
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 42;
  int workers = 1;
};

struct TableauxArgs {
  std::string shape;
  int r = 0;
  int height_bound = 0;  // 0 = unbounded
  int height = 0;
  std::string entries;
  std::string type;
};

struct GroupQueryArgs {
  std::string group;
  int n = 1;
  int k = 1;
  int r = 0;
  int s = 0;
  std::string shape;
  std::string entries;
};

struct SimulateArgs {
  std::string group;
  int n = 1;
  int k = 1;
  int r_max = 2;
  int s_max = 0;
  std::int64_t samples = 10000;
};

struct ReportArgs {
  std::string group;
  std::string n_list;
  int k = 1;
  int r = 0;
  int s = 0;
  std::int64_t samples = 0;  // 0 = exact columns only
};

struct FiniteArgs {
  std::string group;
  int k = 1;
};

std::string run_tableaux(const CLI::App& sub, const TableauxArgs& a) {
  const bool partition_mode = sub.count("--shape") > 0 || sub.count("--r") > 0;
  const bool staircase_mode =
      sub.count("--height") > 0 || sub.count("--entries") > 0 || sub.count("--type") > 0;
  if (partition_mode == staircase_mode)
    throw std::invalid_argument(
        "choose one mode: --shape/--r [--height-bound] or --height/--entries/--type");

  ctm::BigInt count;
  if (partition_mode) {
    if (sub.count("--r") == 0) throw std::invalid_argument("--r is required with --shape");
    ctm::Partition shape{parse_int_list(a.shape)};
    std::optional<int> bound;
    if (sub.count("--height-bound") > 0) bound = a.height_bound;
    count = ctm::count_updown(shape, a.r, bound);
  } else {
    if (sub.count("--height") == 0 || sub.count("--entries") == 0 || sub.count("--type") == 0)
      throw std::invalid_argument("staircase mode needs --height, --entries and --type");
    auto entries = parse_int_list(a.entries);
    if (static_cast<int>(entries.size()) != a.height)
      throw std::invalid_argument("--entries must list exactly --height integers");
    ctm::Staircase shape{std::move(entries)};
    ctm::TypeVector type{parse_int_list(a.type)};
    count = ctm::count_staircase(shape, type);
  }
  return count.str() + "\n";
}

std::string run_dims(const CLI::App& sub, const GroupQueryArgs& a) {
  ctm::GroupKind kind = ctm::parse_group_kind(a.group);
  ctm::BigInt dim;
  if (kind == ctm::GroupKind::Unitary) {
    if (sub.count("--entries") == 0)
      throw std::invalid_argument("unitary labels are given with --entries");
    dim = ctm::dim_unitary(ctm::Staircase{parse_int_list(a.entries)}, a.n);
  } else {
    if (sub.count("--shape") == 0)
      throw std::invalid_argument("labels for this family are given with --shape");
    ctm::Partition shape{parse_int_list(a.shape)};
    switch (kind) {
      case ctm::GroupKind::Symplectic: dim = ctm::dim_symplectic(shape, a.n); break;
      case ctm::GroupKind::SpecialOrthogonalEven: dim = ctm::dim_so_even(shape, a.n); break;
      default: dim = ctm::dim_so_odd(shape, a.n); break;
    }
  }
  return dim.str() + "\n";
}

std::string run_moments(const CLI::App& sub, const GroupQueryArgs& a) {
  ctm::GroupKind kind = ctm::parse_group_kind(a.group);
  if (kind != ctm::GroupKind::Unitary && sub.count("--s") > 0 && a.s != 0)
    throw std::invalid_argument("--s applies only to --group u");
  ctm::Rational value = ctm::trace_moment({kind, a.n}, a.k, a.r, a.s);
  return ctm::format_exact(value) + "\n";
}

std::string run_simulate(const SimulateArgs& a, const CommonArgs& common) {
  ctm::GroupKind kind = ctm::parse_group_kind(a.group);
  if (kind != ctm::GroupKind::Unitary && a.s_max != 0)
    throw std::invalid_argument("--s-max applies only to --group u");
  ctm::EmpiricalMoments em = ctm::estimate_moments({kind, a.n}, a.k, a.r_max, a.s_max,
                                                   a.samples, common.seed, common.workers);
  return ctm::simulate_json(em).dump(2) + "\n";
}

std::string run_report(const ReportArgs& a, const CommonArgs& common) {
  ctm::GroupKind kind = ctm::parse_group_kind(a.group);
  if (kind != ctm::GroupKind::Unitary && a.s != 0)
    throw std::invalid_argument("--s applies only to --group u");
  std::vector<int> requested = parse_int_list(a.n_list);
  if (requested.empty()) throw std::invalid_argument("--n-list must not be empty");

  std::vector<int> ns;
  const int min_rank = ctm::min_admissible_rank(kind, a.r, a.s);
  for (int n : requested) {
    if (n < min_rank) {
      std::cerr << "warning: skipping n=" << n << " (this family needs n >= " << min_rank
                << " for r=" << a.r << ")\n";
      continue;
    }
    ns.push_back(n);
  }
  auto rows = ctm::clt_report(kind, a.k, a.r, a.s, ns);

  struct Empirical {
    double mean_re, mean_im, std_error;
  };
  std::vector<Empirical> empirical;
  if (a.samples > 0) {
    for (int n : ns) {
      auto em = ctm::estimate_moments({kind, n}, a.k, a.r, kind == ctm::GroupKind::Unitary ? a.s : 0,
                                      a.samples, common.seed, common.workers);
      const auto& m = em.moments.back();  // the (r, s) entry
      empirical.push_back({m.mean.real(), m.mean.imag(), m.std_error});
    }
  }

  if (common.format == "json") {
    nlohmann::ordered_json j;
    j["group"] = a.group;
    j["k"] = a.k;
    j["r"] = a.r;
    j["s"] = a.s;
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      nlohmann::ordered_json e;
      e["n"] = row.n;
      e["terms"] = row.terms;
      e["exact"] = ctm::to_fraction_string(row.exact);
      e["exact_decimal"] = row.exact.convert_to<double>();
      e["limit"] = ctm::to_fraction_string(row.limit);
      e["gap"] = ctm::to_fraction_string(row.gap);
      e["gap_decimal"] = row.gap.convert_to<double>();
      if (a.samples > 0) {
        e["empirical_re"] = empirical[i].mean_re;
        e["empirical_im"] = empirical[i].mean_im;
        e["empirical_stderr"] = empirical[i].std_error;
      }
      arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
  }

  std::string out = "n,terms,exact,exact_decimal,limit,gap,gap_decimal";
  if (a.samples > 0) out += ",empirical_re,empirical_im,empirical_stderr";
  out += "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    out += std::to_string(row.n);
    out += ',' + std::to_string(row.terms);
    out += ',' + ctm::csv_field(ctm::to_fraction_string(row.exact));
    out += ',' + ctm::to_decimal_string(row.exact);
    out += ',' + ctm::csv_field(ctm::to_fraction_string(row.limit));
    out += ',' + ctm::csv_field(ctm::to_fraction_string(row.gap));
    out += ',' + ctm::to_decimal_string(row.gap);
    if (a.samples > 0) {
      out += ',' + format_double(empirical[i].mean_re);
      out += ',' + format_double(empirical[i].mean_im);
      out += ',' + format_double(empirical[i].std_error);
    }
    out += "\n";
  }
  return out;
}

std::string run_finite(const FiniteArgs& a, const CommonArgs& common) {
  ctm::FiniteGroup group = a.group == "s3" ? ctm::FiniteGroup::symmetric_3()
                                           : ctm::FiniteGroup::quaternion_8();
  struct Row {
    std::string name;
    int dimension;
    ctm::Rational average, expected;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < group.characters().size(); ++i) {
    const auto& chi = group.characters()[i];
    ctm::Rational avg = ctm::finite_commutator_average(group, static_cast<int>(i), a.k);
    ctm::Rational expected{ctm::BigInt(1),
                           ctm::pow(ctm::BigInt(chi.dimension), 2 * a.k - 1)};
    rows.push_back({chi.name, chi.dimension, avg, expected});
  }

  if (common.format == "json") {
    nlohmann::ordered_json j;
    j["group"] = group.name();
    j["k"] = a.k;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json e;
      e["character"] = row.name;
      e["dimension"] = row.dimension;
      e["average"] = ctm::to_fraction_string(row.average);
      e["expected"] = ctm::to_fraction_string(row.expected);
      e["match"] = row.average == row.expected;
      arr.push_back(std::move(e));
    }
    j["characters"] = std::move(arr);
    return j.dump(2) + "\n";
  }

  std::string out = "character,dimension,average,expected,match\n";
  for (const auto& row : rows) {
    out += ctm::csv_field(row.name);
    out += ',' + std::to_string(row.dimension);
    out += ',' + ctm::csv_field(ctm::to_fraction_string(row.average));
    out += ',' + ctm::csv_field(ctm::to_fraction_string(row.expected));
    out += row.average == row.expected ? ",true\n" : ",false\n";
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo moments of traces of commutator products over the "
               "compact classical groups"};
  app.require_subcommand(1);

  CommonArgs common;
  app.add_option("--output", common.output, "write the payload to this file instead of stdout")
      ->type_name("PATH");
  app.add_option("--format", common.format, "table format for report/finite: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", common.seed, "base seed; sample i uses substream (seed, i)")
      ->capture_default_str();
  app.add_option("--workers", common.workers,
                 "simulation worker threads (speed only, never changes results)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* tableaux = app.add_subcommand("tableaux", "count up-down walks on partitions or staircases");
  tableaux->fallthrough();
  TableauxArgs ta;
  tableaux->add_option("--shape", ta.shape, "target partition, e.g. '2,1' ('' = empty)");
  tableaux->add_option("--r", ta.r, "walk length")->check(CLI::NonNegativeNumber);
  tableaux->add_option("--height-bound", ta.height_bound, "cap on rows along the walk")
      ->check(CLI::PositiveNumber);
  tableaux->add_option("--height", ta.height, "staircase height")->check(CLI::PositiveNumber);
  tableaux->add_option("--entries", ta.entries, "target staircase, e.g. '1,0,-1'");
  tableaux->add_option("--type", ta.type, "step pattern, e.g. '-1,1,1,1,-1'");

  auto* dims = app.add_subcommand("dims", "irreducible dimension of a labelled representation");
  dims->fallthrough();
  GroupQueryArgs da;
  dims->add_option("--group", da.group, "sp, so-even, so-odd or u")->required();
  dims->add_option("--n", da.n, "rank parameter")->required()->check(CLI::PositiveNumber);
  dims->add_option("--shape", da.shape, "partition label (sp/so families)");
  dims->add_option("--entries", da.entries, "length-n staircase label (unitary)");

  auto* moments = app.add_subcommand("moments", "exact moment of the commutator product trace");
  moments->fallthrough();
  GroupQueryArgs ma;
  moments->add_option("--group", ma.group, "sp, so-even, so-odd or u")->required();
  moments->add_option("--n", ma.n, "rank parameter")->required()->check(CLI::PositiveNumber);
  moments->add_option("--k", ma.k, "number of commutators")->required()->check(CLI::PositiveNumber);
  moments->add_option("--r", ma.r, "trace power")->required()->check(CLI::NonNegativeNumber);
  moments->add_option("--s", ma.s, "conjugate trace power (unitary only)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo moments and trace histograms");
  simulate->fallthrough();
  SimulateArgs sa;
  simulate->add_option("--group", sa.group, "sp, so-even, so-odd or u")->required();
  simulate->add_option("--n", sa.n, "rank parameter")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--k", sa.k, "number of commutators")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--r-max", sa.r_max, "estimate powers up to this r")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  simulate->add_option("--s-max", sa.s_max, "conjugate powers up to this s (unitary only)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  simulate->add_option("--samples", sa.samples, "number of Monte Carlo samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* report = app.add_subcommand("report", "exact moments vs the Gaussian limit across ranks");
  report->fallthrough();
  ReportArgs ra;
  report->add_option("--group", ra.group, "sp, so-even, so-odd or u")->required();
  report->add_option("--n-list", ra.n_list, "comma-separated ranks, e.g. '3,6,12'")->required();
  report->add_option("--k", ra.k, "number of commutators")->required()->check(CLI::PositiveNumber);
  report->add_option("--r", ra.r, "trace power")->required()->check(CLI::NonNegativeNumber);
  report->add_option("--s", ra.s, "conjugate trace power (unitary only)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  report->add_option("--samples", ra.samples,
                     "when positive, append Monte Carlo columns with this many samples")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* finite = app.add_subcommand("finite", "finite-group brute-force oracle (s3, q8)");
  finite->fallthrough();
  FiniteArgs fa;
  finite->add_option("--group", fa.group, "s3 or q8")
      ->required()
      ->check(CLI::IsMember({"s3", "q8"}));
  finite->add_option("--k", fa.k, "number of commutators")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string payload;
  if (*tableaux)
    payload = run_tableaux(*tableaux, ta);
  else if (*dims)
    payload = run_dims(*dims, da);
  else if (*moments)
    payload = run_moments(*moments, ma);
  else if (*simulate)
    payload = run_simulate(sa, common);
  else if (*report)
    payload = run_report(ra, common);
  else if (*finite)
    payload = run_finite(fa, common);

  write_payload(payload, common.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
