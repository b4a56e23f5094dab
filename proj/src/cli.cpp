#include "abn/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "abn/io.hpp"
#include "abn/verify.hpp"

namespace abn {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer need_integer(const std::string& text, const char* what) {
  auto n = parse_integer(text);
  if (!n) {
    throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  }
  return *n;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

Character parse_character(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3) {
    throw UsageError("--v expects r,c,chi; got '" + text + "'");
  }
  return Character(need_integer(parts[0], "--v"), need_integer(parts[1], "--v"), need_integer(parts[2], "--v"));
}

Region parse_region(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() != 4) {
    throw UsageError("--region expects beta_lo,beta_hi,alpha_lo,alpha_hi; got '" + text + "'");
  }
  std::vector<Rational> q;
  for (const auto& p : parts) {
    auto x = parse_rational(p);
    if (!x) {
      throw UsageError("--region: not a rational: '" + p + "'");
    }
    q.push_back(*x);
  }
  return Region(q[0], q[1], q[2], q[3]);
}

// "lo:hi", "lo-hi" or a single value.
std::pair<Integer, Integer> parse_range(const std::string& text, const char* what) {
  std::size_t cut = text.find(':');
  if (cut == std::string::npos) {
    cut = text.find('-', 1);
  }
  if (cut == std::string::npos) {
    const Integer n = need_integer(text, what);
    return {n, n};
  }
  return {need_integer(text.substr(0, cut), what), need_integer(text.substr(cut + 1), what)};
}

Integer genus_from(const std::string& g, const std::string& h2) {
  if (g.empty() == h2.empty()) {
    throw UsageError("give exactly one of --g and --h2");
  }
  if (!g.empty()) {
    return need_integer(g, "--g");
  }
  return genus(Surface(need_integer(h2, "--h2")));
}

std::string opt(const std::optional<Integer>& x) { return x ? x->str() : "-"; }

void print_bn_human(std::ostream& out, const BNVerdict& v) {
  out << "V^" << v.r << "_" << v.d << "(|H|), g = " << v.g << " (H^2 = " << 2 * v.g - 2 << ")\n";
  out << "  chi = " << v.chi << ", rho = " << v.rho << "\n";
  if (v.dualized) {
    out << "  Serre dual: d = " << v.reduced_d << ", r = " << v.reduced_r << ", chi = " << v.reduced_chi << "\n";
  }
  out << "  D = " << v.D << ", rho + g - 2 = " << v.lhs << " vs D|chi| - D^2 = " << v.threshold << "\n";
  if (v.R) {
    out << "  R = " << *v.R << ", w0 = (" << v.w0->r() << ", " << v.w0->c() << ", " << v.w0->chi() << ")\n";
  }
  out << "  verdict: " << (v.nonempty ? "NON-EMPTY" : "EMPTY") << "\n";
  if (v.nonempty) {
    out << "  dim = " << opt(v.dim) << ", structure = " << to_string(v.structure);
    if (v.structure == BNStructure::GrassmannianUnion) {
      out << " of " << *v.component_count << " copies of Gr(" << v.fiber->D << ", " << v.fiber->n << ")";
    }
    out << "\n";
  }
  if (!v.note.empty()) {
    out << "  note: " << v.note << "\n";
  }
}

struct StrataRow {
  StratumDescriptor desc;
  bool top = false;
};

int print_report(std::ostream& out, const oracle::Report& rep) {
  if (rep.passed()) {
    out << "PASS " << rep.name << " (" << rep.checks << " checks)\n";
    return 0;
  }
  out << "FAIL " << rep.name << " (" << rep.violations.size() << " of " << rep.checks << " checks)\n";
  const std::size_t shown = std::min<std::size_t>(rep.violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    out << "  " << rep.violations[i] << "\n";
  }
  if (shown < rep.violations.size()) {
    out << "  ... " << rep.violations.size() - shown << " more\n";
  }
  return 1;
}

constexpr const char* kFormats = R"(Output formats:
  human  aligned plain text (default where available)
  json   canonical JSON (sorted keys); integers are numbers when they fit
         in 64 bits, decimal strings otherwise; rationals are "p/q" strings
  csv    table only: header "d/r,<r>...", one row per degree
  svg    table: label heatmap; walls: semicircles in the (beta, alpha)
         half-plane, beta horizontal

Exit codes: 0 ok, 1 verify violation, 2 domain error, 3 invalid class
(negative square), 64 usage. ABN_THREADS caps sweep parallelism.)";

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brill-Noether loci on abelian surfaces: exact verdicts, tables, walls"};
  app.footer(kFormats);
  app.require_subcommand(1);

  std::string g, h2, d, r, format;
  std::function<int()> action;

  auto* bn = app.add_subcommand("bn", "Non-emptiness, dimension and structure of V^r_d(|H|)");
  bn->add_option("--g", g, "genus of curves in |H|");
  bn->add_option("--h2", h2, "H^2 = 2g - 2");
  bn->add_option("--d", d, "degree")->required();
  bn->add_option("--r", r, "r + 1 = number of sections");
  bn->add_option("--format", format, "human | json")->check(CLI::IsMember({"human", "json"}));
  bn->callback([&] {
    action = [&] {
      const Integer gg = genus_from(g, h2);
      const Integer dd = need_integer(d, "--d");
      if (dd + 1 - gg == 0) {
        throw Error(ErrorKind::ChiZero, "chi = d + 1 - g = 0 is excluded");
      }
      if (r.empty()) {
        throw UsageError("--r is required");
      }
      const BNVerdict v = bn_verdict(gg, dd, need_integer(r, "--r"));
      if (format == "json") {
        out << to_json(v).dump(2) << "\n";
      } else {
        print_bn_human(out, v);
      }
      return 0;
    };
  });

  std::string d_range, r_range;
  bool compare = false;
  auto* table = app.add_subcommand("table", "Grid of EMPTY/BN/KLM/NEW labels over d and r");
  table->add_option("--g", g, "genus")->required();
  table->add_option("--d-range", d_range, "degrees lo:hi (or lo-hi)")->required();
  table->add_option("--r-range", r_range, "ranks lo:hi (or lo-hi)")->required();
  table->add_option("--format", format, "human | json | csv | svg")
      ->check(CLI::IsMember({"human", "json", "csv", "svg"}));
  table->add_flag("--compare-paper", compare, "diff against the published g = 28 table");
  table->callback([&] {
    action = [&] {
      const auto [dlo, dhi] = parse_range(d_range, "--d-range");
      const auto [rlo, rhi] = parse_range(r_range, "--r-range");
      const LabelGrid grid = compute_grid(need_integer(g, "--g"), dlo, dhi, rlo, rhi);
      const auto diffs = compare ? compare_with_reference(grid) : std::vector<TableDiff>{};
      if (format == "json") {
        json j = grid_to_json(grid);
        if (compare) {
          json list = json::array();
          for (const auto& diff : diffs) {
            list.push_back({{"d", diff.d}, {"r", diff.r}, {"published", diff.published},
                            {"computed", diff.computed}, {"expected", diff.expected}});
          }
          j["diffs"] = list;
        }
        out << j.dump(2) << "\n";
      } else if (format == "csv") {
        out << grid_to_csv(grid);
      } else if (format == "svg") {
        out << grid_to_svg(grid);
      } else {
        out << grid_to_text(grid);
        if (compare) {
          if (grid.g != 28) {
            out << "no published table for g = " << grid.g << "\n";
          } else if (diffs.empty()) {
            out << "matches the published table\n";
          }
          for (const auto& diff : diffs) {
            out << "diff at (d=" << diff.d << ", r=" << diff.r << "): published " << diff.published
                << ", computed " << diff.computed
                << (diff.expected ? "  [expected: both inequalities evaluate to empty]" : "") << "\n";
          }
        }
      }
      return 0;
    };
  });

  std::string v_text, region_text = "-2,0,1/100,2";
  auto* walls = app.add_subcommand("walls", "Potential walls for a class v in a region of the (beta, alpha) plane");
  walls->add_option("--h2", h2, "H^2")->required();
  walls->add_option("--v", v_text, "class r,c,chi")->required();
  walls->add_option("--region", region_text, "beta_lo,beta_hi,alpha_lo,alpha_hi (rationals)")->capture_default_str();
  walls->add_option("--format", format, "json | svg")->check(CLI::IsMember({"json", "svg"}));
  walls->callback([&] {
    action = [&] {
      const Surface s(need_integer(h2, "--h2"));
      const Character v = parse_character(v_text);
      const Region reg = parse_region(region_text);
      const auto list = enumerate_walls(v, reg, s);
      if (format == "svg") {
        WallPlotOptions options{reg, std::nullopt, false,
                                "walls for v = (" + v.r().str() + ", " + v.c().str() + ", " + v.chi().str() +
                                    "), H^2 = " + s.h_squared().str()};
        if (v.r() == 0 && v.c() == 1 && v.chi() < 0) {
          options.highlight = first_wall_data(v.chi(), s).wall;
          options.gieseker_ray = true;
        }
        out << walls_to_svg(list, options);
      } else {
        json records = json::array();
        for (const auto& rec : list) {
          records.push_back(to_json(rec));
        }
        json j{{"v", to_json(v)},
               {"surface", to_json(s)},
               {"region", json::array({to_json(reg.beta_lo()), to_json(reg.beta_hi()), to_json(reg.alpha_lo()),
                                       to_json(reg.alpha_hi())})},
               {"walls", records}};
        out << j.dump(2) << "\n";
      }
      return 0;
    };
  });

  std::string chi, k;
  auto* strata = app.add_subcommand("strata", "Strata M^h_{k,k_red} for w_k = (k - R, 1, chi)");
  strata->add_option("--h2", h2, "H^2")->required();
  strata->add_option("--chi", chi, "chi < 0")->required();
  strata->add_option("--k", k, "k >= 0")->required();
  strata->add_option("--format", format, "human | json")->check(CLI::IsMember({"human", "json"}));
  strata->callback([&] {
    action = [&] {
      const Surface s(need_integer(h2, "--h2"));
      const Integer c = need_integer(chi, "--chi");
      const Integer kk = need_integer(k, "--k");
      if (c >= 0) {
        throw Error(ErrorKind::NonNegativeChi, "strata need chi < 0");
      }
      if (kk < 0) {
        throw Error(ErrorKind::InvalidRange, "k must be >= 0");
      }
      const FirstWallData first = first_wall_data(c, s);
      const Integer top_h = max_h(kk, c);
      const Integer m = -c;
      std::vector<StrataRow> rows;
      for (Integer kr = 0; kr <= kk; ++kr) {
        for (Integer h = 0; h <= top_h; ++h) {
          if (delta_klm(Rational(h, m)) * m == Rational(kk - kr)) {
            rows.push_back({stratum_status(kk, kr, h, c, s), h == top_h});
          }
        }
      }
      if (format == "json") {
        json list = json::array();
        for (const auto& row : rows) {
          json j = to_json(row.desc);
          j["top"] = row.top;
          list.push_back(j);
        }
        out << json{{"k", to_json(kk)},       {"chi", to_json(c)},   {"surface", to_json(s)},
                    {"R", to_json(first.R)},  {"max_h", to_json(top_h)}, {"strata", list}}
                   .dump(2)
            << "\n";
      } else {
        out << "k = " << kk << ", chi = " << c << ", H^2 = " << s.h_squared() << ", R = " << first.R
            << ", max_h = " << top_h << "\n";
        out << "  k_red      h    dim  fiber\n";
        for (const auto& row : rows) {
          out << std::setw(7) << row.desc.k_red << std::setw(7) << row.desc.h << std::setw(7)
              << opt(row.desc.dim) << "  Gr(" << row.desc.fiber->D << ", " << row.desc.fiber->n << ")"
              << (row.top ? "  <- top stratum (maximal h)" : "") << "\n";
        }
      }
      return 0;
    };
  });

  std::string suite = "all", g_max = "60", r_max = "40", chi_min = "-40", k_max = "20";
  auto* verify = app.add_subcommand("verify", "Brute-force oracle sweeps; nonzero exit on any violation");
  verify->add_option("--suite", suite,
                     "klm-equivalence | strata | first-wall | delta | integrality | dual-path | table | all")->capture_default_str()
      ->check(CLI::IsMember(
          {"klm-equivalence", "strata", "first-wall", "delta", "integrality", "dual-path", "table", "all"}));
  verify->add_option("--g-max", g_max, "sweep bound on g")->capture_default_str();
  verify->add_option("--r-max", r_max, "sweep bound on r")->capture_default_str();
  verify->add_option("--chi-min", chi_min, "sweep lower bound on chi")->capture_default_str();
  verify->add_option("--k-max", k_max, "strata: largest k")->capture_default_str();
  verify->add_option("--chi", chi, "strata / first-wall: chi (default: built-in list)");
  verify->add_option("--h2", h2, "strata / first-wall: H^2 (default: built-in list)");
  verify->add_option("--region", region_text, "first-wall: region")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      const SweepBox box{need_integer(g_max, "--g-max"), need_integer(r_max, "--r-max"),
                         need_integer(chi_min, "--chi-min")};
      std::vector<std::pair<Integer, Integer>> strata_cases = {{-1, 6}, {-3, 54}, {-7, 54}};
      std::vector<std::pair<Integer, Integer>> wall_cases = {{-1, 6}, {-3, 54}};
      if (chi.empty() != h2.empty()) {
        throw UsageError("--chi and --h2 go together");
      }
      if (!chi.empty()) {
        strata_cases = wall_cases = {{need_integer(chi, "--chi"), need_integer(h2, "--h2")}};
      }
      const bool all = suite == "all";
      int status = 0;
      if (all || suite == "klm-equivalence") {
        status |= print_report(out, oracle::brute_klm_equivalence(box.g_max, box.r_max, box.chi_min));
      }
      if (all || suite == "delta") {
        status |= print_report(out, suite_delta());
      }
      if (all || suite == "integrality") {
        status |= print_report(out, suite_integrality(box));
      }
      if (all || suite == "dual-path") {
        status |= print_report(out, suite_dual_path(box));
      }
      if (all || suite == "table") {
        status |= print_report(out, suite_table());
      }
      if (all || suite == "strata") {
        for (const auto& [c, hs] : strata_cases) {
          auto rep = oracle::brute_stratum_recursion(need_integer(k_max, "--k-max"), c, Surface(hs));
          rep.name += " chi=" + c.str() + " H^2=" + hs.str();
          status |= print_report(out, rep);
        }
      }
      if (all || suite == "first-wall") {
        const Region reg = parse_region(region_text);
        for (const auto& [c, hs] : wall_cases) {
          auto rep = oracle::verify_first_wall(c, Surface(hs), reg);
          rep.name += " chi=" + c.str() + " H^2=" + hs.str();
          status |= print_report(out, rep);
        }
      }
      return status ? int(kExitViolation) : int(kExitOk);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::NegativeSquare ? kExitInvalidClass : kExitDomain;
  }
}

}  // namespace abn
