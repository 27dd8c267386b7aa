#include "linksing/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

#include "linksing/conjecture.hpp"
#include "linksing/jsonio.hpp"

namespace linksing {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& piece : split_csv(text)) {
    std::size_t pos = 0;
    int v = std::stoi(piece, &pos);
    while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos])))
      ++pos;
    if (pos != piece.size())
      throw std::invalid_argument("expected a comma-separated integer list, got '" +
                                  text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<PowerSeriesQ> parse_series_list(const std::string& text, int trunc) {
  std::vector<PowerSeriesQ> out;
  for (const std::string& piece : split_csv(text))
    out.push_back(PowerSeriesQ::parse(piece, trunc));
  return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string shifts_text(const ShiftSet& s) {
  std::ostringstream os;
  for (int i : s.exceptional) os << i << ", ";
  os << s.threshold << "+";
  return os.str();
}

void print_semigroup_text(std::ostream& out, const NumSemigroup& sg) {
  out << "generators: " << join_ints(sg.generators()) << "\n";
  out << "gaps: " << join_ints(sg.gaps()) << "\n";
  out << "conductor: " << sg.conductor() << "\n";
  out << "delta: " << sg.delta() << "\n";
  out << "milnor: " << sg.milnor() << "\n";
}

void print_series_text(std::ostream& out, const TruncSeries& s) {
  for (const auto& [e, c] : s.coeffs())
    out << "q^" << e << ": " << c.to_string() << "\n";
  out << "truncated at q^" << s.trunc() << "\n";
}

void print_report_text(std::ostream& out, const CheckReport& r) {
  out << r.check;
  for (const auto& [name, value] : r.parameters) out << " " << name << "=" << value;
  out << ": " << (r.pass ? "pass" : "fail") << "\n";
  if (r.first_mismatch) {
    out << "first mismatch at q^" << r.first_mismatch->q_exponent << "\n";
    out << "expected: " << r.first_mismatch->expected << "\n";
    out << "actual: " << r.first_mismatch->actual << "\n";
  }
}

void emit(std::ostream& out, bool json, const ordered_json& j,
          const std::function<void()>& text) {
  if (json)
    out << j.dump(2) << "\n";
  else
    text();
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact HOMFLY-type invariants of plane-curve singularity links"};
  app.require_subcommand(1);

  std::string format = "text";
  int trunc = 120;
  int k = 0, n = 0;
  std::string gens_csv, series_csv;
  std::vector<int> torus_pair;
  bool histogram = false;
  bool cable = false;
  int exit_code = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_trunc = [&](CLI::App* sub) {
    sub->add_option("--trunc", trunc, "series truncation order in q-powers")
        ->capture_default_str();
  };
  auto as_json = [&] { return format == "json"; };

  auto build_semigroup = [&]() -> NumSemigroup {
    const bool have_gens = !gens_csv.empty();
    const bool have_series = !series_csv.empty();
    if (have_gens == have_series)
      throw std::invalid_argument("provide exactly one of --gens and --series");
    if (have_gens) return NumSemigroup::from_generators(parse_int_list(gens_csv));
    return semigroup_from_series(parse_series_list(series_csv, trunc), trunc);
  };

  // homfly-torus
  {
    auto* sub = app.add_subcommand("homfly-torus",
                                   "HOMFLY polynomial of the (k,n) torus knot");
    sub->add_option("k", k, "strand count")->required();
    sub->add_option("n", n, "twist count")->required();
    add_format(sub);
    sub->callback([&] {
      LaurentPoly j = jones_torus(k, n);
      ordered_json o{{"k", k}, {"n", n}, {"poly", j.to_string()}};
      emit(out, as_json(), o, [&] { out << j.to_string() << "\n"; });
    });
  }

  // skein-t2
  {
    auto* sub = app.add_subcommand(
        "skein-t2", "HOMFLY of the (2,n) torus link from the skein recurrence");
    sub->add_option("n", n, "twist count")->required();
    add_format(sub);
    sub->callback([&] {
      ZPoly j = t2_skein(n);
      ordered_json o{{"n", n}, {"poly", j.to_string()}};
      emit(out, as_json(), o, [&] { out << j.to_string() << "\n"; });
    });
  }

  // semigroup
  {
    auto* sub = app.add_subcommand(
        "semigroup", "numerical semigroup from generators or from ring elements");
    sub->add_option("--gens", gens_csv, "comma-separated positive generators");
    sub->add_option("--series", series_csv,
                    "comma-separated power series in t, e.g. \"t^4, t^6+t^7\"");
    add_trunc(sub);
    add_format(sub);
    sub->callback([&] {
      NumSemigroup sg = build_semigroup();
      emit(out, as_json(), semigroup_json(sg), [&] { print_semigroup_text(out, sg); });
    });
  }

  // modules-table
  {
    auto* sub = app.add_subcommand(
        "modules-table", "all N-modules of a semigroup with values and shift sets");
    sub->add_option("--gens", gens_csv, "comma-separated positive generators");
    sub->add_option("--series", series_csv, "comma-separated power series in t");
    add_trunc(sub);
    add_format(sub);
    sub->callback([&] {
      NumSemigroup sg = build_semigroup();
      emit(out, as_json(), modules_table_json(sg), [&] {
        for (const GammaModule& mod : semigroup_modules(sg)) {
          out << "(" << join_ints(mod.min_generators(), ",") << ") value="
              << mod.added_gap_count() << " shifts=" << shifts_text(module_shifts(sg, mod))
              << "\n";
        }
      });
    });
  }

  // staircase-series
  {
    auto* sub = app.add_subcommand(
        "staircase-series",
        "sum q^{2l}(1-a^2)^m over monomial ideals of C[[t^k,t^n]], by enumeration");
    sub->add_option("k", k, "")->required();
    sub->add_option("n", n, "")->required();
    sub->add_flag("--histogram", histogram, "per-length histogram of (l, m) pairs");
    add_trunc(sub);
    add_format(sub);
    sub->callback([&] {
      if (histogram) {
        auto hist = staircase_histogram(k, n, (trunc - 1) / 2);
        emit(out, as_json(), histogram_json(k, n, hist), [&] {
          for (const auto& [l, by_m] : hist)
            for (const auto& [m, count] : by_m)
              out << "l=" << l << " m=" << m << " count=" << count << "\n";
        });
      } else {
        TruncSeries s = staircase_series_direct(k, n, trunc);
        emit(out, as_json(), series_json(s), [&] { print_series_text(out, s); });
      }
    });
  }

  // residue-series
  {
    auto* sub = app.add_subcommand(
        "residue-series", "the same series from the residue closed form");
    sub->add_option("k", k, "")->required();
    sub->add_option("n", n, "")->required();
    add_trunc(sub);
    add_format(sub);
    sub->callback([&] {
      TruncSeries s = staircase_series_residue(k, n, trunc);
      emit(out, as_json(), series_json(s), [&] { print_series_text(out, s); });
    });
  }

  // alexander
  {
    auto* sub = app.add_subcommand(
        "alexander", "Alexander polynomial from a semigroup or from HOMFLY");
    sub->add_option("--gens", gens_csv, "semigroup generators");
    sub->add_option("--series", series_csv, "ring generators as series in t");
    auto* torus_opt =
        sub->add_option("--torus", torus_pair, "k n: route through the knot polynomial")
            ->expected(2);
    add_trunc(sub);
    add_format(sub);
    sub->callback([&, torus_opt] {
      AlexanderPoly alex = [&] {
        if (torus_opt->count() > 0) {
          if (!gens_csv.empty() || !series_csv.empty())
            throw std::invalid_argument("--torus excludes --gens/--series");
          const TorusLinkId id{torus_pair[0], torus_pair[1]};
          return alexander_from_homfly(jones_torus(id.k, id.n), id.milnor());
        }
        return alexander_from_semigroup(build_semigroup());
      }();
      ordered_json o{{"degree", alex.degree()}, {"poly", alex.to_string()}};
      emit(out, as_json(), o, [&] { out << alex.to_string() << "\n"; });
    });
  }

  // verify-torus
  {
    auto* sub = app.add_subcommand(
        "verify-torus",
        "check the torus-knot HOMFLY against the staircase generating function");
    sub->add_option("k", k, "")->required();
    sub->add_option("n", n, "")->required();
    add_trunc(sub);
    add_format(sub);
    sub->callback([&] {
      CheckReport r = verify_torus(k, n, trunc);
      emit(out, as_json(), report_json(r), [&] { print_report_text(out, r); });
      if (!r.pass) exit_code = 1;
    });
  }

  // verify-cable-4613
  {
    auto* sub = app.add_subcommand(
        "verify-cable-4613",
        "assemble the <4,6,13> singularity value and check it against the "
        "reference cable polynomial");
    add_trunc(sub);
    add_format(sub);
    sub->callback([&] {
      CheckReport r = verify_cable_4613(trunc);
      ordered_json o = report_json(r);
      Int n0 = 0;
      if (r.pass) {
        const LaurentPoly assembled = assemble_cable_4613(trunc);
        n0 = genus_expansion(assembled, 16, 1).n_at_zero(0);
        o["n0"] = json_int(n0);
      }
      emit(out, as_json(), o, [&] {
        print_report_text(out, r);
        if (r.pass) out << "n0: " << n0.str() << "\n";
      });
      if (!r.pass) exit_code = 1;
    });
  }

  // genus
  {
    auto* sub = app.add_subcommand(
        "genus", "genus expansion coefficients n_h of a knot HOMFLY value");
    auto* torus_opt =
        sub->add_option("--torus", torus_pair, "k n: the (k,n) torus knot")->expected(2);
    sub->add_flag("--cable-4613", cable, "the assembled <4,6,13> cable value");
    add_trunc(sub);
    add_format(sub);
    sub->callback([&, torus_opt] {
      GenusExpansion g = [&] {
        if (cable == (torus_opt->count() > 0))
          throw std::invalid_argument("provide exactly one of --torus and --cable-4613");
        if (cable) return genus_expansion(assemble_cable_4613(trunc), 16, 1);
        const TorusLinkId id{torus_pair[0], torus_pair[1]};
        return genus_expansion(jones_torus(id.k, id.n), id.milnor(), 1);
      }();
      emit(out, as_json(), genus_json(g), [&] {
        for (int h = 0; h <= g.delta(); ++h)
          out << "n_" << h << " = " << g.n(h).to_string() << "\n";
      });
    });
  }

  // sl1
  {
    auto* sub = app.add_subcommand(
        "sl1", "check that the a := q specialization of the staircase series is 1");
    sub->add_option("k", k, "")->required();
    sub->add_option("n", n, "")->required();
    add_trunc(sub);
    add_format(sub);
    sub->callback([&] {
      CheckReport r = sl1_check(k, n, trunc);
      emit(out, as_json(), report_json(r), [&] { print_report_text(out, r); });
      if (!r.pass) exit_code = 1;
    });
  }

  // qbinom-check
  {
    auto* sub = app.add_subcommand(
        "qbinom-check",
        "check the unrefined series against the Gaussian-binomial ratio");
    sub->add_option("k", k, "")->required();
    sub->add_option("n", n, "")->required();
    add_trunc(sub);
    add_format(sub);
    sub->callback([&] {
      CheckReport r = qbinom_corollary_check(k, n, trunc);
      emit(out, as_json(), report_json(r), [&] { print_report_text(out, r); });
      if (!r.pass) exit_code = 1;
    });
  }

  // euler-jacobian
  {
    auto* sub = app.add_subcommand(
        "euler-jacobian", "Euler number C(k+n,k)/(k+n) of the compactified Jacobian");
    sub->add_option("k", k, "")->required();
    sub->add_option("n", n, "")->required();
    add_format(sub);
    sub->callback([&] {
      Int e = euler_jacobian(k, n);
      ordered_json o{{"k", k}, {"n", n}, {"euler", json_int(e)}};
      emit(out, as_json(), o, [&] { out << e.str() << "\n"; });
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace linksing
