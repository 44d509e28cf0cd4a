#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "essat/arrangement.hpp"
#include "essat/constructions.hpp"
#include "essat/errors.hpp"
#include "essat/geometry.hpp"
#include "essat/lattice.hpp"
#include "essat/mono_paths.hpp"
#include "essat/svg.hpp"

using namespace essat;

namespace {

enum Exit : int {
  kSaturated = 0,
  kNotSaturated = 1,
  kNotFree = 2,
  kUsage = 64,
  kParse = 65,
  kNonGeneric = 66,
  kInternal = 70,
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::SATURATED: return kSaturated;
    case Verdict::NOT_SATURATED: return kNotSaturated;
    case Verdict::NOT_FREE: return kNotFree;
  }
  return kInternal;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string points_text(const PointSet& P) {
  std::ostringstream ss;
  write_points(ss, P);
  return ss.str();
}

void print_certificate_summary(const Certificate& cert) {
  std::cout << to_string(cert.verdict) << ": " << cert.points.size() << " points, "
            << cert.stats.n_lines << " lines, " << cert.stats.n_cells << " cells\n";
  if (cert.failure) {
    std::cout << "unsaturated sample: (" << to_string(cert.failure->x) << ", "
              << to_string(cert.failure->y) << ")\n";
  }
}

VerifyLevel parse_level(const std::string& s) {
  return s == "full" ? VerifyLevel::FULL : VerifyLevel::FREENESS_ONLY;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturated cup-cap and convex-polygon point sets: construction and verification"};
  app.require_subcommand(1);

  VerifyOptions vopts;
  std::string input, out_path, report_path, cert_path;
  int k = 0, l = 0, n = 0, r = 2;

  auto add_verify_flags = [&](CLI::App* cmd) {
    cmd->add_option("--threads", vopts.threads, "Worker threads (0: ESSAT_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--simplify", vopts.simplify, "Use simplest rational samples");
  };

  // verify-cupcap / verify-gon
  auto* vc = app.add_subcommand("verify-cupcap", "Check (k,l)-cup-cap saturation of a point set");
  vc->add_option("--k", k, "Forbidden cup size")->required()->check(CLI::Range(1, 1000));
  vc->add_option("--l", l, "Forbidden cap size")->required()->check(CLI::Range(1, 1000));
  vc->add_option("--input", input, "Point-set file")->required();
  vc->add_option("--out", out_path, "Certificate JSON output");
  add_verify_flags(vc);

  auto* vg = app.add_subcommand("verify-gon", "Check n-gon saturation of a point set");
  vg->add_option("--n", n, "Forbidden polygon size")->required()->check(CLI::Range(3, 1000));
  vg->add_option("--input", input, "Point-set file")->required();
  vg->add_option("--out", out_path, "Certificate JSON output");
  add_verify_flags(vg);

  // construct
  std::string verify_level = "freeness";
  auto* cons = app.add_subcommand("construct", "Build saturated point sets");
  cons->require_subcommand(1);
  auto* cc = cons->add_subcommand("cupcap", "Recursive (k,l)-cup-cap-saturated set");
  cc->add_option("--k", k)->required()->check(CLI::Range(1, 64));
  cc->add_option("--l", l)->required()->check(CLI::Range(1, 64));
  cc->add_option("--out", out_path, "Point-set output (default stdout)");
  cc->add_option("--cert", cert_path, "Certificate output (implies full verification)");
  std::string cupcap_verify = "none";
  cc->add_option("--verify", cupcap_verify, "none or full")->check(CLI::IsMember({"none", "full"}));
  add_verify_flags(cc);

  auto add_gon_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", n)->required()->check(CLI::Range(3, 64));
    cmd->add_option("--out", out_path, "Point-set output (default stdout)");
    cmd->add_option("--report", report_path, "Placement report JSON output");
    cmd->add_option("--cert", cert_path, "Certificate output (with --verify full)");
    cmd->add_option("--verify", verify_level, "freeness or full")
        ->check(CLI::IsMember({"freeness", "full"}));
    add_verify_flags(cmd);
  };
  auto* cg = cons->add_subcommand("gon", "n-gon-saturated set of size 7/8 * 2^(n-2)");
  add_gon_flags(cg);
  auto* ce = cons->add_subcommand("es-free", "Classical 2^(n-2)-point n-gon-free set");
  add_gon_flags(ce);

  // hypergraph
  bool transitive = false, list = false, check_saturated = false;
  int size = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  auto* hg = app.add_subcommand("hypergraph", "Monotone paths in 2-colored ordered hypergraphs");
  hg->require_subcommand(1);
  auto* he = hg->add_subcommand("extend", "Insert one vertex with the minimal missing label");
  he->add_option("--input", input, "Coloring JSON")->required();
  he->add_option("--k", k, "Red path budget")->required()->check(CLI::PositiveNumber);
  he->add_option("--l", l, "Blue path budget")->required()->check(CLI::PositiveNumber);
  he->add_option("--out", out_path, "Coloring JSON output (default stdout)");
  he->add_flag("--transitive", transitive, "Keep the coloring transitive (graphs only)");

  auto* hs = hg->add_subcommand("saturate", "Extend until no label is missing");
  hs->add_option("--input", input, "Starting coloring (default: empty)");
  hs->add_option("--r", r, "Uniformity when starting empty")->check(CLI::Range(2, 8));
  hs->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  hs->add_option("--l", l)->required()->check(CLI::PositiveNumber);
  hs->add_option("--out", out_path, "Coloring JSON output (default stdout)");
  hs->add_flag("--transitive", transitive, "Keep the coloring transitive (graphs only)");

  auto* hl = hg->add_subcommand("enumerate-lattice", "Print the size of the label lattice P_r(n)");
  hl->add_option("--r", r)->required()->check(CLI::Range(2, 8));
  hl->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  hl->add_flag("--list", list, "Also print the elements in canonical order");

  auto* hc = hg->add_subcommand("check", "Path-freeness, transitivity, brute-force saturation");
  hc->add_option("--input", input, "Coloring JSON")->required();
  hc->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  hc->add_option("--l", l)->required()->check(CLI::PositiveNumber);
  hc->add_flag("--saturated", check_saturated, "Also require brute-force saturation");
  hc->add_flag("--transitive", transitive, "Also require transitivity");

  auto* hr = hg->add_subcommand("random", "Random path-free coloring grown by insertions");
  hr->add_option("--r", r)->check(CLI::Range(2, 8));
  hr->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  hr->add_option("--l", l)->required()->check(CLI::PositiveNumber);
  hr->add_option("--size", size, "Target vertex count")->required()->check(CLI::NonNegativeNumber);
  hr->add_option("--seed", seed, "RNG seed (default: random, printed)")->each([&](const std::string&) {
    seed_given = true;
  });
  hr->add_option("--out", out_path, "Coloring JSON output (default stdout)");

  // sequence
  bool saturate = false;
  auto* sq = app.add_subcommand("sequence", "Extend a sequence without long monotone subsequences");
  sq->add_option("--input", input, "One rational per line")->required();
  sq->add_option("--k", k, "Forbidden increasing length")->required()->check(CLI::Range(2, 1000));
  sq->add_option("--l", l, "Forbidden decreasing length")->required()->check(CLI::Range(2, 1000));
  sq->add_flag("--saturate", saturate, "Extend until no insertion is possible");
  sq->add_option("--out", out_path, "Sequence output (default stdout)");

  // plot
  std::string svg_path, highlight_path;
  auto* pl = app.add_subcommand("plot", "Render a point set as SVG");
  pl->add_option("--input", input, "Point-set file")->required();
  pl->add_option("--svg", svg_path, "SVG output")->required();
  pl->add_option("--highlight", highlight_path, "Witness or certificate JSON");
  pl->add_option("--report", report_path, "Placement report JSON (draws disks)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*vc || *vg) {
      const auto P = load_points(input);
      const auto cert = *vc ? verify_cupcap_saturated(P, k, l, vopts) : verify_gon_saturated(P, n, vopts);
      print_certificate_summary(cert);
      if (!out_path.empty()) write_text(out_path, cert.to_json().dump(2) + "\n");
      return exit_for(cert.verdict);
    }

    if (*cc) {
      const auto P = cupcap_saturated(k, l);
      write_text(out_path, points_text(P));
      std::cerr << "cupcap_saturated(" << k << "," << l << "): " << P.size() << " points\n";
      if (cupcap_verify == "full" || !cert_path.empty()) {
        const auto cert = verify_cupcap_saturated(P, k, l, vopts);
        std::cerr << to_string(cert.verdict) << ", " << cert.stats.n_cells << " cells\n";
        if (!cert_path.empty()) write_text(cert_path, cert.to_json().dump(2) + "\n");
        return exit_for(cert.verdict);
      }
      return kSaturated;
    }

    if (*cg || *ce) {
      GonConstructionParams params;
      params.n = n;
      params.level = parse_level(verify_level);
      params.verify = vopts;
      const auto built = *cg ? gon_saturated(params) : es_free_construction(params);
      write_text(out_path, points_text(built.points));
      std::cerr << (*cg ? "gon_saturated(" : "es_free_construction(") << n << "): "
                << built.points.size() << " points, largest convex subset "
                << built.report.largest_convex << ", attempts " << built.report.attempts << "\n";
      if (!report_path.empty()) write_text(report_path, built.report.to_json().dump(2) + "\n");
      if (built.certificate) {
        std::cerr << to_string(built.certificate->verdict) << ", " << built.certificate->stats.n_cells
                  << " cells\n";
        if (!cert_path.empty()) write_text(cert_path, built.certificate->to_json().dump(2) + "\n");
        return exit_for(built.certificate->verdict);
      }
      return kSaturated;
    }

    if (*he || *hs) {
      std::optional<OrderedColoring> H;
      if (!input.empty()) H = load_coloring(input);
      else H = OrderedColoring(r, 0);
      const LabelLattice lattice(k, l, H->r());
      if (!is_path_free(*H, k, l)) {
        std::cerr << "input coloring already has a forbidden path\n";
        return kNotFree;
      }
      if (transitive && H->r() != 2) throw PreconditionError("--transitive needs r = 2");
      auto step = [&] {
        H = transitive ? extend_transitive(*H, lattice).coloring : extend(*H, lattice).coloring;
      };
      if (*he) {
        try {
          step();
        } catch (const NoMissingLabel& e) {
          std::cerr << e.what() << "\n";
          return kNotSaturated;
        }
      } else {
        try {
          for (;;) step();
        } catch (const NoMissingLabel&) {
        }
      }
      std::cerr << H->n() << " vertices\n";
      write_text(out_path, H->to_json().dump(2) + "\n");
      return 0;
    }

    if (*hl) {
      const LabelLattice lattice(n, n, r);
      std::cout << lattice.size(r) << "\n";
      if (list) {
        for (std::size_t i = 0; i < lattice.size(r); ++i) std::cout << lattice.describe(r, i) << "\n";
      }
      return 0;
    }

    if (*hc) {
      const auto H = load_coloring(input);
      const bool free = is_path_free(H, k, l);
      std::cout << "path-free: " << (free ? "yes" : "no") << "\n";
      if (!free) return kNotFree;
      bool ok = true;
      if (transitive) {
        const bool t = is_transitive(H);
        std::cout << "transitive: " << (t ? "yes" : "no") << "\n";
        ok = ok && t;
      }
      if (check_saturated) {
        const bool s = is_saturated_bruteforce(H, k, l);
        std::cout << "saturated: " << (s ? "yes" : "no") << "\n";
        ok = ok && s;
      }
      return ok ? 0 : kNotSaturated;
    }

    if (*hr) {
      if (!seed_given) seed = std::random_device{}();
      std::cerr << "seed " << seed << "\n";
      std::mt19937_64 rng(seed);
      const auto H = random_path_free(r, k, l, size, rng);
      std::cerr << H.n() << " vertices\n";
      write_text(out_path, H.to_json().dump(2) + "\n");
      return 0;
    }

    if (*sq) {
      auto seq = load_sequence(input);
      if (longest_increasing(seq) >= k || longest_decreasing(seq) >= l) {
        std::cerr << "sequence already has a forbidden monotone subsequence\n";
        return kNotFree;
      }
      bool grew = false;
      try {
        do {
          seq = sequence_extend(seq, k, l).sequence;
          grew = true;
        } while (saturate);
      } catch (const NoMissingLabel&) {
      }
      if (!grew && !saturate) {
        std::cerr << "no extension: the sequence is saturated\n";
        return kNotSaturated;
      }
      std::ostringstream ss;
      write_sequence(ss, seq);
      write_text(out_path, ss.str());
      std::cerr << seq.size() << " elements\n";
      return 0;
    }

    if (*pl) {
      const auto P = load_points(input);
      std::vector<Highlight> highlights;
      if (!highlight_path.empty()) {
        for (const auto& w : witnesses_from_json(read_json(highlight_path))) {
          highlights.push_back(highlight_of(P, w));
        }
      }
      std::optional<PlacementReport> report;
      if (!report_path.empty()) report = PlacementReport::from_json(read_json(report_path));
      write_text(svg_path, render_svg(P, highlights, report));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NonGenericError& e) {
    std::cerr << "non-generic input: " << e.what() << "\n";
    return kNonGeneric;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const RetryBudgetExhausted& e) {
    std::cerr << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
