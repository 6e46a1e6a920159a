#include "kreg/cli.hpp"

#include "kreg/automaton.hpp"
#include "kreg/builtins.hpp"
#include "kreg/error.hpp"
#include "kreg/growth.hpp"
#include "kreg/io.hpp"
#include "kreg/multiplicative.hpp"
#include "kreg/semigroup.hpp"
#include "kreg/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

namespace kreg {

namespace {

enum class Format { Text, Csv, Json };

struct Context {
  std::ostream& out;
  std::ostream& err;
  Format format = Format::Text;
  unsigned threads = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void require_format(const Context& ctx, std::initializer_list<Format> allowed) {
  if (std::find(allowed.begin(), allowed.end(), ctx.format) == allowed.end())
    throw UsageError("--format not supported by this subcommand");
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("failed writing " + path);
}

Json spectral_json(const SpectralReport& r) {
  Json j;
  j["charpoly"] = r.charpoly.to_string();
  j["classification"] = to_string(r.classification);
  j["nilpotent_order"] = r.nilpotent_order_a;
  Json cyc = Json::array();
  for (const CyclotomicFactor& f : r.cyclotomic_part) cyc.push_back({{"n", f.index}, {"multiplicity", f.multiplicity}});
  j["cyclotomic"] = std::move(cyc);
  j["non_cyclotomic"] = r.non_cyclotomic_part.to_string();
  if (r.defect_witness) j["defect_witness"] = *r.defect_witness;
  if (r.power_cycle) j["power_cycle"] = {{"start", r.power_cycle->start}, {"period", r.power_cycle->period}};
  return j;
}

std::string pass_fail(bool pass) { return pass ? "PASS" : "FAIL"; }

// Each subcommand registers its options and a runner returning the exit code.
struct Command {
  CLI::App* app;
  std::function<int(Context&)> action;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-regular sequences: evaluation, growth certificates, multiplicative discrepancy", "kreg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format_name = "text";
  unsigned threads = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<Command> commands;
  auto add = [&](const char* name, const char* description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->fallthrough();
    return sub;
  };

  // Shared option storage; each subcommand binds only what it uses.
  std::string rep_path, cert_path, out_path, csv_path, matrix_path, spec_path, word_text, n_text, residue_text,
      xmax_text, name;
  std::size_t budget = 100000;
  std::size_t count_n = 0;
  unsigned level = 0;
  std::optional<int> base;
  std::uint64_t x_u64 = 0, n_max = 0;
  unsigned r_max = 0, l_max = 0, m_max = 0;
  std::size_t verify_n = 0;

  {
    CLI::App* s = add("eval", "Evaluate f(N)");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--n", n_text)->required();
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Json});
      const LinearRepresentation rep = load_representation(rep_path);
      const Integer n = parse_integer(n_text);
      if (n < 0) throw UsageError("--n must be non-negative");
      const Integer v = evaluate(rep, n);
      if (ctx.format == Format::Json) ctx.out << dump(Json{{"n", integer_to_json(n)}, {"value", integer_to_json(v)}});
      else ctx.out << v << '\n';
      return int{kExitOk};
    }});
  }
  {
    CLI::App* s = add("eval-word", "Evaluate f on a digit string");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--word", word_text)->required();
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Json});
      const LinearRepresentation rep = load_representation(rep_path);
      const Word w = Word::parse(word_text, rep.base());
      const Integer v = evaluate_word(rep, w);
      if (ctx.format == Format::Json) ctx.out << dump(Json{{"word", w.to_string()}, {"value", integer_to_json(v)}});
      else ctx.out << v << '\n';
      return int{kExitOk};
    }});
  }
  {
    CLI::App* s = add("kernel", "Write the representation of n -> f(k^L n + R)");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--level", level)->required();
    s->add_option("--residue", residue_text)->required();
    s->add_option("--out", out_path)->required();
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text});
      const LinearRepresentation rep = load_representation(rep_path);
      const LinearRepresentation sub = kernel_subsequence(rep, level, parse_integer(residue_text));
      save_representation(out_path, sub);
      ctx.out << "wrote " << out_path << " (dim " << sub.dim() << ")\n";
      return int{kExitOk};
    }});
  }
  {
    CLI::App* s = add("probe", "Search for a finite automaton computing f");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--budget", budget)->check(CLI::PositiveNumber);
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text});
      const LinearRepresentation rep = load_representation(rep_path);
      const ProbeResult result = automaticity_probe(rep, budget);
      if (const auto* exceeded = std::get_if<ProbeBudgetExceeded>(&result)) {
        ctx.out << "BUDGET_EXCEEDED after " << exceeded->explored << " states\n";
        return int{kExitBudget};
      }
      ctx.out << std::get<Automaton>(result).to_string();
      return int{kExitOk};
    }});
  }
  {
    CLI::App* s = add("classify", "Spectral classification of one integer matrix");
    s->add_option("--matrix", matrix_path)->required();
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Json});
      const SpectralReport report = classify(load_matrix(matrix_path));
      if (ctx.format == Format::Json) ctx.out << dump(spectral_json(report));
      else ctx.out << report.to_string();
      return int{kExitOk};
    }});
  }
  {
    CLI::App* s = add("explore", "Explore the semigroup generated by the digit matrices");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--budget", budget)->check(CLI::PositiveNumber);
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Json});
      const LinearRepresentation rep = load_representation(rep_path);
      SemigroupBudget b;
      b.max_elements = budget;
      const SemigroupExploration e = explore(rep.matrices(), b);
      if (ctx.format == Format::Json) {
        Json j{{"status", to_string(e.status)}, {"elements", e.size()}};
        if (e.witness) j["witness"] = e.witness->to_string();
        if (e.witness_report) j["witness_report"] = spectral_json(*e.witness_report);
        if (!e.exhausted_axis.empty()) j["exhausted_axis"] = e.exhausted_axis;
        ctx.out << dump(j);
      } else {
        switch (e.status) {
          case ExplorationStatus::Closed: ctx.out << "CLOSED(" << e.size() << ")\n"; break;
          case ExplorationStatus::Infinite:
            ctx.out << "INFINITE witness " << e.witness->to_string() << " ("
                    << to_string(e.witness_report->classification) << ") after " << e.size() << " elements\n";
            break;
          case ExplorationStatus::BudgetExceeded:
            ctx.out << "BUDGET_EXCEEDED (" << e.exhausted_axis << ") after " << e.size() << " elements\n";
            break;
        }
      }
      return int{e.status == ExplorationStatus::BudgetExceeded ? kExitBudget : kExitOk};
    }});
  }
  {
    CLI::App* s = add("growth", "Build a pumping certificate and optionally verify it");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--out", out_path);
    s->add_option("--verify-n", verify_n);
    s->add_option("--budget", budget)->check(CLI::PositiveNumber);
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Json});
      const LinearRepresentation rep = load_representation(rep_path);
      GrowthOptions options;
      options.budget.max_elements = budget;
      const CertificateResult result = build_certificate(rep, options);
      if (result.outcome == CertificateOutcome::Bounded) {
        ctx.out << (ctx.format == Format::Json ? dump(Json{{"outcome", "BOUNDED"}, {"detail", result.detail}})
                                               : "BOUNDED: " + result.detail + "\n");
        return int{kExitOk};
      }
      if (result.outcome == CertificateOutcome::BudgetExceeded) {
        ctx.out << (ctx.format == Format::Json
                        ? dump(Json{{"outcome", "BUDGET_EXCEEDED"}, {"stage", result.stage}, {"detail", result.detail}})
                        : "BUDGET_EXCEEDED (" + result.stage + "): " + result.detail + "\n");
        return int{kExitBudget};
      }
      const GrowthCertificate& cert = *result.certificate;
      if (!out_path.empty()) save_certificate(out_path, cert);
      std::optional<VerificationReport> report;
      if (verify_n > 0) report = verify_certificate(rep, cert, verify_n, {8, ctx.threads});
      if (ctx.format == Format::Json) {
        Json j{{"outcome", "CERTIFIED"}, {"certificate", to_json(cert)}};
        if (report) j["verify"] = {{"n", verify_n}, {"result", pass_fail(report->pass)}};
        ctx.out << dump(j);
      } else {
        ctx.out << "CERTIFIED " << to_string(cert.kind) << " pump " << cert.pump.to_string() << " c0 "
                << to_fraction_string(cert.c0) << " c_log " << to_fraction_string(cert.c_log) << '\n';
        if (report) {
          ctx.out << pass_fail(report->pass);
          if (report->first_failure) ctx.out << " first failure at n = " << *report->first_failure;
          ctx.out << '\n';
        }
      }
      return int{report && !report->pass ? kExitFail : kExitOk};
    }});
  }
  {
    CLI::App* s = add("verify", "Check m(n) >= c0 n for n up to N");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--cert", cert_path)->required();
    s->add_option("--n", count_n)->required()->check(CLI::PositiveNumber);
    s->add_option("--csv", csv_path, "Also write the per-n table");
    commands.push_back({s, [&](Context& ctx) {
      const LinearRepresentation rep = load_representation(rep_path);
      const GrowthCertificate cert = load_certificate(cert_path);
      if (cert.base != rep.base()) throw IncompatibleBase(rep.base(), cert.base);
      const VerificationReport report = verify_certificate(rep, cert, count_n, {8, ctx.threads});
      if (!csv_path.empty()) write_text_file(csv_path, render_csv(report));
      if (ctx.format == Format::Csv) {
        ctx.out << render_csv(report);
      } else if (ctx.format == Format::Json) {
        Json rows = Json::array();
        for (const VerificationRow& r : report.rows) rows.push_back({{"n", r.n}, {"m", integer_to_json(r.max_value)}});
        Json j{{"result", pass_fail(report.pass)}, {"c0", to_fraction_string(report.c0)}, {"n_min", report.n_min},
               {"rows", std::move(rows)}};
        if (report.first_failure) j["first_failure"] = *report.first_failure;
        ctx.out << dump(j);
      } else {
        ctx.out << pass_fail(report.pass);
        if (report.first_failure) ctx.out << " first failure at n = " << *report.first_failure;
        ctx.out << '\n';
      }
      return int{report.pass ? kExitOk : kExitFail};
    }});
  }
  {
    CLI::App* s = add("loglb", "Exhibit N <= x with |f(N)| > c_log ln N on the grid x = k^e");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--cert", cert_path);
    s->add_option("--xmax", xmax_text)->required();
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Csv});
      const LinearRepresentation rep = load_representation(rep_path);
      std::optional<GrowthCertificate> cert;
      if (!cert_path.empty()) {
        cert = load_certificate(cert_path);
        if (cert->base != rep.base()) throw IncompatibleBase(rep.base(), cert->base);
      }
      const Integer x_max = parse_integer(xmax_text);
      if (x_max < 1) throw UsageError("--xmax must be positive");
      const LogBoundReport report = log_lower_bound_check(rep, cert ? &*cert : nullptr, x_max);
      if (ctx.format == Format::Csv) {
        ctx.out << render_csv(report);
      } else {
        for (const LogBoundPoint& p : report.points) {
          ctx.out << "x = " << p.x << ": ";
          if (p.found) ctx.out << "N = " << p.n_value << " [" << p.word << "] f = " << p.f_value << '\n';
          else ctx.out << "no witness\n";
        }
        ctx.out << (report.applicable ? pass_fail(report.pass) : std::string("NOT_APPLICABLE"));
        if (!report.message.empty()) ctx.out << ": " << report.message;
        ctx.out << '\n';
      }
      return int{report.pass ? kExitOk : kExitFail};
    }});
  }
  {
    CLI::App* s = add("builtin", "Write a built-in representation");
    s->add_option("name", name)->required();
    s->add_option("--base", base);
    s->add_option("--out", out_path);
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Json});
      const LinearRepresentation rep = builtin(name, base);
      if (out_path.empty()) {
        ctx.out << dump(to_json(rep));
      } else {
        save_representation(out_path, rep);
        ctx.out << "wrote " << out_path << '\n';
      }
      return int{kExitOk};
    }});
  }
  {
    CLI::App* s = add("mult-scan", "Partial sums G(x) of a multiplicative function on a geometric grid");
    s->add_option("--spec", spec_path)->required();
    s->add_option("--xmax", x_u64)->required()->check(CLI::PositiveNumber);
    s->add_option("--csv", csv_path);
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Csv});
      const MultiplicativeSpec spec = load_spec(spec_path);
      const DiscrepancyReport report = discrepancy_scan(spec, x_u64);
      if (!csv_path.empty()) write_text_file(csv_path, render_csv(report));
      if (ctx.format == Format::Csv) {
        ctx.out << render_csv(report);
      } else {
        ctx.out << "G(" << report.x_max << ") = " << report.final_g << ", max |G| = " << report.max_abs_g
                << ", fitted c = " << report.fitted_c << '\n';
        if (report.upper_bound_checked) {
          ctx.out << "|G(x)| <= q(1 + log_q x): " << pass_fail(report.upper_bound_holds);
          if (report.first_upper_violation) ctx.out << " first violation at x = " << *report.first_upper_violation;
          ctx.out << '\n';
        }
      }
      return int{report.upper_bound_holds ? kExitOk : kExitFail};
    }});
  }
  {
    CLI::App* s = add("sp-check", "Bounded search for the least r in the residue-class characterization");
    s->add_option("--spec", spec_path)->required();
    s->add_option("--rmax", r_max)->required();
    s->add_option("--nmax", n_max)->required()->check(CLI::PositiveNumber);
    s->add_option("--lmax", l_max)->required();
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Json});
      const MultiplicativeSpec spec = load_spec(spec_path);
      const MultiplicativeFunction f(spec);
      const std::uint64_t k = spec.base();
      const BaseFactorization factorization = prime_power_check(k);
      const SchlagePuchtaResult result =
          schlage_puchta_check([&f](std::uint64_t n) { return f(n); }, k, r_max, n_max, l_max);
      if (ctx.format == Format::Json) {
        Json refutations = Json::array();
        for (const auto& v : result.refutations)
          refutations.push_back({{"r", v.r}, {"ell", v.ell}, {"n1", v.n1}, {"n2", v.n2}});
        Json j{{"k", k}, {"prime_power", factorization.accept}, {"refutations", std::move(refutations)}};
        j["r"] = result.r ? Json(*result.r) : Json(nullptr);
        ctx.out << dump(j);
      } else {
        ctx.out << "k = " << k << (factorization.accept ? " (prime power)" : " (not a prime power)") << '\n';
        for (const auto& v : result.refutations)
          ctx.out << "r = " << v.r << " refuted: ell = " << v.ell << ", f(" << v.n1 << ") != f(" << v.n2 << ")\n";
        if (result.r) ctx.out << "r = " << *result.r << '\n';
        else ctx.out << "no r <= " << r_max << '\n';
      }
      return int{result.r ? kExitOk : kExitFail};
    }});
  }
  {
    CLI::App* s = add("repunit", "Check G([(10)^m]_q) = f(q) m");
    s->add_option("--spec", spec_path)->required();
    s->add_option("--mmax", m_max)->required()->check(CLI::PositiveNumber);
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Csv});
      const RepunitReport report = repunit_identity_check(load_spec(spec_path), m_max);
      if (ctx.format == Format::Csv) {
        ctx.out << render_csv(report);
      } else {
        for (const RepunitRow& r : report.rows)
          ctx.out << "m = " << r.m << ": N = " << r.n << ", G = " << r.g << ", expected " << r.expected << '\n';
        ctx.out << pass_fail(report.pass) << '\n';
      }
      return int{report.pass ? kExitOk : kExitFail};
    }});
  }
  {
    CLI::App* s = add("grec", "Check the q-adic recursion and periodicity of G");
    s->add_option("--spec", spec_path)->required();
    s->add_option("--x", x_u64)->required()->check(CLI::PositiveNumber);
    commands.push_back({s, [&](Context& ctx) {
      require_format(ctx, {Format::Text, Format::Json});
      const GRecursionReport r = g_recursion_check(load_spec(spec_path), x_u64);
      const bool pass = r.recursion_holds && r.periodicity_holds;
      if (ctx.format == Format::Json) {
        Json j{{"x", r.x}, {"g_direct", r.g_direct}, {"g_recursion", r.g_recursion},
               {"recursion", pass_fail(r.recursion_holds)}, {"period_constant", r.period_constant},
               {"periodicity", pass_fail(r.periodicity_holds)}, {"result", pass_fail(pass)}};
        if (r.first_periodicity_violation) j["first_periodicity_violation"] = *r.first_periodicity_violation;
        ctx.out << dump(j);
      } else {
        ctx.out << "G(" << r.x << ") = " << r.g_direct << " direct, " << r.g_recursion << " by recursion\n"
                << "F(y + q) = F(y) + " << r.period_constant << ": " << pass_fail(r.periodicity_holds) << '\n'
                << pass_fail(pass) << '\n';
      }
      return int{pass ? kExitOk : kExitFail};
    }});
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kreg: " << e.what() << '\n';
    return kExitUsage;
  }

  Context ctx{out, err};
  ctx.format = format_name == "csv" ? Format::Csv : format_name == "json" ? Format::Json : Format::Text;
  ctx.threads = threads;
  try {
    for (const Command& c : commands)
      if (c.app->parsed()) return c.action(ctx);
  } catch (const FormatError& e) {
    err << "kreg: malformed file " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "kreg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "kreg: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kreg
