#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbps/qbps.hpp"

// Command-line front end. Exit codes:
//   0 success, 1 failed verify check, 2 schema or usage error,
//   3 asymmetric quiver, 4 cutoff exceeded, 5 missing block entry,
//   6 unsupported input or 64-bit overflow.

namespace qbps::cli {

inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitAsymmetric = 3;
inline constexpr int kExitCutoff = 4;
inline constexpr int kExitMissingBlock = 5;
inline constexpr int kExitUnsupported = 6;

struct QuiverArgs {
  std::string quiver_path;
  std::int64_t loops = -1;
  std::string dim;
  std::optional<std::int64_t> v;
  std::string delta;
  std::string output = "table";
  bool force = false;

  Quiver quiver() const {
    if (!quiver_path.empty() && loops >= 0) throw SchemaError("give either --quiver or --loops, not both");
    if (!quiver_path.empty()) return io::load_quiver(quiver_path);
    if (loops >= 0) return Quiver::loop_quiver(loops);
    throw SchemaError("a quiver is required: --quiver PATH or --loops N");
  }

  DimVector dimension(const Quiver& q) const {
    if (dim.empty()) throw SchemaError("--dim is required");
    auto d = io::parse_dim(dim);
    check_dimension(q, d);
    if (d.is_zero()) throw SchemaError("zero dimension vector");
    return d;
  }

  /// delta from --v (a multiple of tau_d) or --delta (per vertex).
  CentralWeight central_weight(const DimVector& d) const {
    if (v && !delta.empty()) throw SchemaError("give either --v or --delta, not both");
    if (v) return CentralWeight::multiple_of_tau(Rational(*v), d);
    if (delta.empty()) throw SchemaError("--v or --delta is required");
    auto w = io::parse_delta(delta);
    if (w.per_vertex.size() != d.size())
      throw SchemaError("--delta has " + std::to_string(w.per_vertex.size()) + " entries but the quiver has " +
                        std::to_string(d.size()) + " vertices");
    return w;
  }

  /// Integer v = <1_d, delta>, for commands defined on multiples of tau_d.
  std::int64_t integer_v(const DimVector& d) const {
    const auto total = central_weight(d).total(d);
    if (!is_integer(total)) throw UnsupportedInput("<1_d, delta> = " + to_string(total) + " is not an integer");
    return to_int64(numerator(total));
  }

  OutputFormat format() const {
    if (output == "json") return OutputFormat::json;
    if (output == "csv") return OutputFormat::csv;
    return OutputFormat::table;
  }
};

inline void add_quiver_flags(CLI::App* cmd, QuiverArgs& a, bool needs_weight) {
  cmd->add_option("--quiver", a.quiver_path, "quiver JSON file {\"vertices\": [...], \"arrows\": [[...]]}");
  cmd->add_option("--loops", a.loops, "use the one-vertex quiver with this many loops instead of --quiver")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--dim", a.dim, "dimension vector \"a,b,...\" in the quiver's vertex order")->required();
  if (needs_weight) {
    cmd->add_option("--v", a.v, "delta = v * tau_d");
    cmd->add_option("--delta", a.delta, "per-vertex delta \"p/q,...\" in the quiver's vertex order");
  }
  cmd->add_option("--output", a.output, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_flag("--force", a.force, "lift the enumeration cutoffs");
}

inline std::string dims_label(const DimVector& d) { return to_string(d); }

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice-point counts, partition sets and BPS dimension bookkeeping for symmetric quivers"};
  app.name("qbps");
  app.require_subcommand(1);

  QuiverArgs mc;
  std::string membership = "checked";
  unsigned threads = 1;
  auto* magic = app.add_subcommand("magic-count", "dimension of K0 of the magic category (lattice count)");
  add_quiver_flags(magic, mc, true);
  magic->add_option("--fast-membership", membership, "on, off, checked or audit")
      ->check(CLI::IsMember({"on", "off", "checked", "audit"}));
  magic->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  QuiverArgs ss;
  auto* sset = app.add_subcommand("s-set", "partitions of d with epsilon = 1, one per line");
  add_quiver_flags(sset, ss, true);

  std::int64_t ih_loops = 1, ih_d = 1, ih_v = 0;
  std::string ih_output = "table";
  auto* ih = app.add_subcommand("ih-dim", "score-sequence count for the one-vertex 2g+1-loop quiver");
  ih->add_option("--loops", ih_loops, "odd number of loops 2g+1")->required()->check(CLI::PositiveNumber);
  ih->add_option("--dim", ih_d, "dimension d")->required()->check(CLI::PositiveNumber);
  ih->add_option("--v", ih_v, "v")->required();
  ih->add_option("--output", ih_output, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));

  QuiverArgs bp;
  std::string blocks_path, builtin, flavor = "mf";
  auto* bps = app.add_subcommand("bps-dim", "total dimension of the BPS assembly and the K-theory split");
  add_quiver_flags(bps, bp, true);
  bps->add_option("--blocks", blocks_path, "block table JSON {\"blocks\": [{\"e\": [...], \"dim\": n}], ...}");
  bps->add_option("--builtin", builtin, "built-in block table")
      ->check(CLI::IsMember({"tripled-one-loop", "one-loop", "toric-potential"}));
  bps->add_option("--flavor", flavor, "mf (matrix factorization) or preprojective")
      ->check(CLI::IsMember({"mf", "preprojective"}));

  QuiverArgs fd;
  DeltaSearchBounds bounds;
  auto* find = app.add_subcommand("find-delta", "a delta with S = {d}");
  add_quiver_flags(find, fd, false);
  find->add_option("--max-numerator", bounds.max_numerator, "search bound")->check(CLI::PositiveNumber);
  find->add_option("--max-denominator", bounds.max_denominator, "search bound")->check(CLI::PositiveNumber);

  bool deep = false;
  std::string verify_output = "table", report_path;
  auto* verify = app.add_subcommand("verify", "run the reproduction table");
  verify->add_flag("--deep", deep, "also run the oracle suites");
  verify->add_option("--output", verify_output, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  verify->add_option("--report", report_path, "also write the JSON report to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  }

  try {
    if (magic->parsed()) {
      const auto q = mc.quiver();
      const auto d = mc.dimension(q);
      const auto delta = mc.central_weight(d);
      CountOptions opts;
      opts.threads = threads;
      opts.force = mc.force;
      opts.membership = membership == "on"    ? MembershipMode::on
                        : membership == "off" ? MembershipMode::off
                        : membership == "audit" ? MembershipMode::audit
                                                : MembershipMode::checked;
      const auto res = magic_count(q, d, delta, opts);
      Table t{{"dim", "delta", "count"}, {{dims_label(d), io::format_delta(delta), std::to_string(res.count)}}};
      if (opts.membership == MembershipMode::audit || opts.membership == MembershipMode::checked) {
        t.headers.push_back("disagreements");
        t.rows[0].push_back(std::to_string(res.disagreements));
      }
      out << render(t, mc.format());
      return 0;
    }
    if (sset->parsed()) {
      const auto q = ss.quiver();
      const auto d = ss.dimension(q);
      const auto delta = ss.central_weight(d);
      Table t{{"partition", "length"}, {}};
      for (const auto& a : s_set(q, d, delta, kPartitionCutoff, ss.force))
        t.rows.push_back({to_string(a), std::to_string(a.length())});
      out << render(t, ss.format());
      return 0;
    }
    if (ih->parsed()) {
      if (ih_loops % 2 == 0) throw SchemaError("--loops must be odd (2g+1)");
      const auto g = (ih_loops - 1) / 2;
      Table t{{"loops", "dim", "v", "count"},
              {{std::to_string(ih_loops), std::to_string(ih_d), std::to_string(ih_v),
                std::to_string(score_sequence_count(g, ih_d, ih_v))}}};
      QuiverArgs fmt;
      fmt.output = ih_output;
      out << render(t, fmt.format());
      return 0;
    }
    if (bps->parsed()) {
      const auto q = bp.quiver();
      const auto d = bp.dimension(q);
      const auto delta = bp.central_weight(d);
      if (blocks_path.empty() == builtin.empty()) throw SchemaError("give exactly one of --blocks and --builtin");
      BlockDimTable table;
      if (!blocks_path.empty())
        table = io::load_block_table(blocks_path);
      else if (builtin == "tripled-one-loop")
        table = builtin_tables::tripled_one_loop();
      else if (builtin == "one-loop")
        table = builtin_tables::one_loop();
      else
        table = builtin_tables::toric_with_potential();
      const auto assembly = bps_assembly_dim(q, d, delta, table, kPartitionCutoff, bp.force);
      const auto k = ktheory_dim_from_bps(assembly, table.monodromy,
                                          flavor == "preprojective" ? Flavor::preprojective : Flavor::matrix_factorization,
                                          table.invariant_dim);
      Table t{{"dim", "delta", "bps_total", "k0", "k1"},
              {{dims_label(d), io::format_delta(delta), std::to_string(assembly), std::to_string(k.k0),
                std::to_string(k.k1)}}};
      out << render(t, bp.format());
      return 0;
    }
    if (find->parsed()) {
      const auto q = fd.quiver();
      const auto d = fd.dimension(q);
      const auto res = find_delta(q, d, bounds, kPartitionCutoff, fd.force);
      Table t{{"found", "v", "delta", "multiple_of_tau"}, {}};
      if (res)
        t.rows.push_back({"yes", std::to_string(res->v), io::format_delta(res->delta),
                          res->multiple_of_tau ? "yes" : "no"});
      else
        t.rows.push_back({"no", "", "", ""});
      out << render(t, fd.format());
      return res ? 0 : kExitUnsupported;
    }
    if (verify->parsed()) {
      const auto report = acceptance::run_all(deep);
      QuiverArgs fmt;
      fmt.output = verify_output;
      out << render(report, fmt.format());
      if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw SchemaError("cannot write " + report_path);
        f << serialize(report);
      }
      return report.exit_code();
    }
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const AsymmetricQuiverError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAsymmetric;
  } catch (const CutoffExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCutoff;
  } catch (const MissingBlockError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMissingBlock;
  } catch (const UnsupportedInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
  return kExitSchema;
}

}  // namespace qbps::cli
