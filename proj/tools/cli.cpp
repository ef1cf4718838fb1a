#include "cli.hpp"

#include "csep/error.hpp"
#include "csep/examples.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace csep {

namespace {

using report::json;

enum Exit { Ok = 0, Validation = 1, Budget = 2, Internal = 3 };

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw report::InputError(path, "cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw report::InputError(path, e.what());
  }
}

/// Inline JSON when the argument starts with '{' or '[', else a file.
json json_arg(const std::string& s) {
  auto p = s.find_first_not_of(" \t\n");
  if (p != std::string::npos && (s[p] == '{' || s[p] == '[')) {
    try {
      return json::parse(s);
    } catch (const json::parse_error& e) {
      throw report::InputError("argument", e.what());
    }
  }
  return load_json(s);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void print_analysis(std::ostream& out, const VirtAbGroup& grp) {
  out << "order " << grp.group().order() << ", dim " << grp.dim() << "\n";
  out << "square hull (prime " << grp.hull().prime << "):\n";
  for (std::size_t i = 0; i < grp.hull().size(); ++i) {
    const auto& c = grp.hull().components[i];
    out << "  M" << i + 1 << ": rank " << c.rank() << ", d " << c.d << ", basis/" << c.lattice.den << " "
        << to_string(std::span<const Int>(c.lattice.num.basis().row(0)));
    for (std::size_t r = 1; r < c.rank(); ++r) out << " " << to_string(std::span<const Int>(c.lattice.num.basis().row(r)));
    out << "\n";
  }
  for (int g = 0; g < grp.group().order(); ++g) {
    auto idx = index(grp.w(g), Lattice::full(grp.dim()));
    out << "  g=" << g << ": rank W_g " << grp.w(g).rank() << ", [M:W_g] " << (idx ? idx->get_str() : "inf")
        << ", rank V_g " << grp.v_lat(g).rank() << "\n";
  }
  out << "naive bound " << naive_upper_bound(grp) << "\n";
}

void print_certificate(std::ostream& out, const ExponentCertificate& c) {
  out << "k3 = " << c.k << " (" << to_string(c.mode) << ", complete " << yes(c.complete) << ", bracket [" << c.lower
      << ", " << c.upper << "], naive " << c.naive << ", unreached " << c.unreached << ")\n";
  if (c.witness)
    out << "witness g=" << c.witness->g << " v1=" << to_string(std::span<const Int>(c.witness->v1))
        << " v2=" << to_string(std::span<const Int>(c.witness->v2)) << " k1=" << to_string(std::span<const Int>(c.witness->k1))
        << " k2=" << to_string(std::span<const Int>(c.witness->k2)) << "\n";
}

json certificate_json(const VirtAbGroup& grp, const ExponentCertificate& c) {
  json j = report::to_json(c);
  if (c.witness) j["witness_dim"] = min_admitting_dim(grp, *c.witness);
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"conjugacy separability of virtually abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  int jobs = 1;
  bool as_json = false;
  app.add_option("--seed", seed, "seed for randomized subroutines");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "print the JSON report");

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "validation, square hull, W/V tables, naive bound");
  analyze->add_option("input", input, "input document")->required();

  auto* conj = app.add_subcommand("conj", "decide conjugacy of two elements");
  std::string xs, ys;
  long sep_budget = 0;
  conj->add_option("input", input)->required();
  conj->add_option("--x", xs, "element {\"v\": [...], \"g\": i}")->required();
  conj->add_option("--y", ys, "element")->required();
  conj->add_option("--separate", sep_budget, "also find the least separating quotient index up to this budget");

  auto* expo = app.add_subcommand("exponent", "the exponent k3 with a certificate");
  bool exact = false, upper = false;
  std::string witness_file;
  std::size_t leaf_budget = ExponentOptions{}.leaf_budget;
  int height_cap = ExponentOptions{}.height_cap;
  expo->add_option("input", input)->required();
  auto* o_exact = expo->add_flag("--exact", exact, "exact search (default)");
  auto* o_wit = expo->add_option("--witness", witness_file, "tuples file: lower bound from these tuples");
  auto* o_up = expo->add_flag("--upper", upper, "naive upper bound only");
  o_exact->excludes(o_wit)->excludes(o_up);
  o_wit->excludes(o_up);
  expo->add_option("--budget", leaf_budget, "pattern combinations per g");
  expo->add_option("--height-cap", height_cap, "curve point multiplier");

  auto* growth = app.add_subcommand("growth", "empirical growth table and witness-sequence probes");
  int n_max = 3;
  long g_budget = 100000;
  unsigned j_max = 3;
  std::string probe, out_path, format = "csv";
  growth->add_option("input", input)->required();
  growth->add_option("--n-max", n_max, "largest ball radius")->check(CLI::PositiveNumber);
  growth->add_option("--budget", g_budget, "largest quotient index searched")->check(CLI::PositiveNumber);
  growth->add_option("--probe", probe, "witness tuple (inline JSON or file) for the probe table");
  growth->add_option("--j-max", j_max, "lcm points probed")->check(CLI::PositiveNumber);
  growth->add_option("--out", out_path, "output file");
  growth->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* examples = app.add_subcommand("examples", "run a built-in instance end to end");
  std::string name;
  examples->add_option("name", name, "built-in name")->required()->check(CLI::IsMember(example_names()));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? Ok : Validation;
  }

  HullOptions hopt;
  hopt.seed = seed;
  try {
    if (*examples) {
      auto grp = VirtAbGroup::new_split(example_rep(name), hopt);
      auto cert = k3_exponent(grp);
      if (as_json) {
        json j = {{"example", name},
                  {"description", example_description(name)},
                  {"analysis", report::analyze(grp)},
                  {"exponent", certificate_json(grp, cert)}};
        out << j.dump(2) << "\n";
      } else {
        out << name << ": " << example_description(name) << "\n";
        print_analysis(out, grp);
        print_certificate(out, cert);
      }
      return cert.complete ? Ok : Budget;
    }

    auto in = report::read_input(load_json(input), hopt);
    const auto& grp = in.group;

    if (*analyze) {
      if (as_json) {
        json j = report::analyze(grp);
        if (in.from_factor_set) {
          j["section"] = json::array();
          for (const auto& c : in.section) j["section"].push_back(report::to_json(c));
        }
        out << j.dump(2) << "\n";
      } else {
        print_analysis(out, grp);
      }
      return Ok;
    }

    if (*conj) {
      Element x = report::element_from(json_arg(xs), "--x", grp.dim());
      Element y = report::element_from(json_arg(ys), "--y", grp.dim());
      auto ans = grp.is_conjugate(x, y);
      json j = {{"x", report::to_json(x)}, {"y", report::to_json(y)}, {"conjugate", ans.conjugate}, {"witness", nullptr}};
      if (ans.witness) j["witness"] = report::to_json(*ans.witness);
      int code = Ok;
      std::optional<SeparatingQuotient> q;
      if (!ans.conjugate && sep_budget > 0) {
        try {
          q = grp.min_separating_index(x, y, Int(sep_budget));
          j["separation"] = q ? json{{"index", report::to_json(q->index)}, {"kernel", report::to_json(q->n)}, {"complete", q->complete}}
                              : json(nullptr);
          if (!q || !q->complete) code = Budget;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::BudgetExceeded) throw;
          j["separation"] = nullptr;
          code = Budget;
        }
      }
      if (as_json) {
        out << j.dump(2) << "\n";
      } else {
        out << (ans.conjugate ? "conjugate" : "not conjugate");
        if (ans.witness) out << " via " << to_string(*ans.witness);
        out << "\n";
        if (q) out << "separating quotient of index " << q->index << (q->complete ? "" : " (search truncated)") << "\n";
        else if (code == Budget) out << "no separating quotient within budget " << sep_budget << "\n";
      }
      return code;
    }

    if (*expo) {
      ExponentOptions opt;
      opt.leaf_budget = leaf_budget;
      opt.height_cap = height_cap;
      if (upper) opt.mode = ExponentMode::Naive;
      if (!witness_file.empty()) {
        opt.mode = ExponentMode::Witness;
        json t = json_arg(witness_file);
        if (t.is_object()) t = json::array({t});
        if (!t.is_array()) throw report::InputError(witness_file, "expected an array of tuples");
        for (std::size_t i = 0; i < t.size(); ++i) opt.tuples.push_back(report::tuple_from(t[i], "/" + std::to_string(i), grp.dim()));
      }
      auto cert = k3_exponent(grp, opt);
      if (as_json) out << certificate_json(grp, cert).dump(2) << "\n";
      else print_certificate(out, cert);
      return cert.mode == ExponentMode::Exact && !cert.complete ? Budget : Ok;
    }

    if (*growth) {
      GrowthOptions gopt;
      gopt.jobs = jobs;
      auto rows = empirical_conj(grp, n_max, Int(g_budget), gopt);
      std::vector<ProbeRow> probes;
      std::optional<Tuple> tuple;
      if (!probe.empty()) {
        tuple = report::tuple_from(json_arg(probe), "--probe", grp.dim());
        std::size_t k = min_admitting_dim(grp, *tuple);
        probes = probe_lower_bound(grp, *tuple, j_max, Int(g_budget), k);
      }
      bool hit = false;
      for (const auto& r : rows) hit = hit || r.budget_hit;
      for (const auto& p : probes) hit = hit || p.budget_hit;
      std::string text;
      if (format == "csv") {
        text = growth_csv(rows);
        if (!probes.empty()) {
          std::ostringstream os;
          os << "\nj,lcm,conjugate,index,model\n";
          for (const auto& p : probes)
            os << p.j << ',' << p.lcm << ',' << (p.conjugate ? 1 : 0) << ',' << (p.index ? p.index->get_str() : "") << ','
               << p.model << '\n';
          text += os.str();
        }
      } else {
        json j;
        j["growth"] = json::array();
        for (const auto& r : rows) j["growth"].push_back(report::to_json(r));
        if (tuple) {
          j["probe"] = {{"tuple", report::to_json(*tuple)}, {"k", min_admitting_dim(grp, *tuple)}, {"rows", json::array()}};
          for (const auto& p : probes) j["probe"]["rows"].push_back(report::to_json(p));
        }
        j["budget"] = g_budget;
        text = j.dump(2) + "\n";
      }
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw report::InputError(out_path, "cannot write");
        f << text;
        out << "wrote " << out_path << "\n";
      }
      return hit ? Budget : Ok;
    }
  } catch (const report::InputError& e) {
    err << "error: " << e.what() << "\n";
    return Validation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::CapExceeded) return Budget;
    if (e.kind() == ErrorKind::Internal) return Internal;
    return Validation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return Internal;
  }
  return Internal;
}

}  // namespace csep
