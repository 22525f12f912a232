#include "spindefect/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "spindefect/entanglement.hpp"
#include "spindefect/greens.hpp"
#include "spindefect/transport.hpp"

namespace spindefect::cli {

namespace {

constexpr const char* kSchemaVersion = "1";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_cell(const Cell& cell) {
  if (!cell.number) return cell.text;
  if (cell.integral) return std::to_string(static_cast<long>(*cell.number));
  return format_real(*cell.number);
}

nlohmann::json json_cell(const Cell& cell) {
  if (!cell.number) {
    if (cell.text.empty()) return nullptr;
    return cell.text;
  }
  if (cell.integral) return static_cast<long>(*cell.number);
  // Round-trip through the fixed text format so CSV and JSON carry identical values.
  return std::stod(format_real(*cell.number));
}

std::vector<double> alpha_grid(const RunConfig& config) {
  if (!(config.alpha_step > 0.0)) throw ParameterError("--alpha-step must be > 0");
  if (config.alpha_max < config.alpha_min) {
    throw ParameterError("--alpha-max must not be below --alpha-min");
  }
  const long count = std::lround((config.alpha_max - config.alpha_min) / config.alpha_step) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (long k = 0; k < count; ++k) {
    double a = config.alpha_min + k * config.alpha_step;
    if (std::abs(a) < 1e-9 * config.alpha_step) a = 0.0;
    // Snap to the decimal grid the user typed (e.g. -0.3 not -0.30000000000000004).
    a = std::round(a * 1e12) / 1e12;
    grid.push_back(a);
  }
  return grid;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + tmp.string() + "' for writing");
    file << content;
    file.flush();
    if (!file) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", value);
  return buf;
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  for (const auto& [key, value] : table.meta) os << "# " << key << '=' << format_real(value) << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_cell(row[c]);
    os << '\n';
  }
  return os.str();
}

std::string to_json(const Table& table, const RunConfig& config) {
  nlohmann::ordered_json doc;
  auto& meta = doc["meta"];
  meta["version"] = kSchemaVersion;
  meta["subcommand"] = config.subcommand;
  meta["method"] = to_string(config.method);
  meta["spec"] = {
      {"n_sites", config.spec.n_sites},
      {"h", std::stod(format_real(config.spec.field_h))},
      {"J", std::stod(format_real(config.spec.coupling_J))},
      {"eps", std::stod(format_real(config.spec.defect_eps))},
      {"alpha", std::stod(format_real(config.spec.alpha()))},
      {"defect_site", config.spec.defect_site},
  };
  for (const auto& [key, value] : table.meta) meta[key] = std::stod(format_real(value));
  meta["columns"] = table.columns;
  auto& data = doc["data"];
  data = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = json_cell(row[c]);
    data.push_back(std::move(obj));
  }
  return doc.dump(2) + '\n';
}

Table cmd_spectrum(const RunConfig& config) {
  const Spectrum spectrum = diagonalize(build_hamiltonian(config.spec));
  const DefectLattice lattice = config.spec.lattice();
  Table table;
  table.columns = {"kind", "index", "value"};
  for (long k = 0; k < spectrum.size(); ++k) {
    table.rows.push_back({Cell::label("eigenvalue"), Cell::integer(k),
                          Cell::real(spectrum.eigenvalues(k))});
  }
  table.rows.push_back({Cell::label("band_min"), Cell::missing(), Cell::real(lattice.band_min())});
  table.rows.push_back({Cell::label("band_max"), Cell::missing(), Cell::real(lattice.band_max())});
  if (lattice.alpha != 0.0) {
    table.rows.push_back({Cell::label("E_loc"), Cell::missing(),
                          Cell::real(localized_state(lattice).energy_loc)});
  }
  return table;
}

Table cmd_localized(const RunConfig& config) {
  const DefectLattice lattice = config.spec.lattice();
  if (lattice.alpha == 0.0) {
    throw NoBoundStateError("no bound state exists for alpha = 0; pass a nonzero --alpha or --eps");
  }
  if (config.j_max < 0) throw ParameterError("--j-max must be >= 0");
  const LocalizedState state = localized_state(lattice);
  Table table;
  table.meta = {{"E_loc", state.energy_loc},
                {"xi", state.xi},
                {"localization_length", state.localization_length()}};
  table.columns = {"n", "b_n", "C_0n"};
  const Site l = lattice.defect_site;
  for (long m = -config.j_max; m <= config.j_max; ++m) {
    const Site n = l + m;
    table.rows.push_back({Cell::integer(n), Cell::real(state.amplitude(n)),
                          m == 0 ? Cell::missing()
                                 : Cell::real(localized_concurrence(lattice, l, n))});
  }
  return table;
}

Table cmd_evolve(const RunConfig& config) {
  const TimeGrid grid = TimeGrid::uniform(config.t_max, config.dt);
  const long r_max = config.j_max;
  if (r_max < 0) throw ParameterError("--j-max must be >= 0");
  std::vector<Site> receivers;
  if (config.receiver) {
    receivers.push_back(*config.receiver);
  } else {
    for (long r = -r_max; r <= r_max; ++r) receivers.push_back(r);
  }

  Table table;
  table.columns = {"t", "r", "C_r"};
  const ChainSpec& spec = config.spec;
  if (config.method == Method::Oracle) {
    const RingPropagator ring(spec);
    for (double t : grid.t_values) {
      const Eigen::VectorXcd c = ring.column(config.sender, t);
      for (Site r : receivers) {
        table.rows.push_back({Cell::real(t), Cell::integer(r),
                              Cell::real(std::abs(c(wrap_site(r, spec.n_sites))))});
      }
    }
    return table;
  }
  const DefectLattice lattice = spec.lattice();
  if (config.method == Method::Asymptotic && lattice.alpha == 0.0) {
    throw ParameterError("asymptotic method needs a nonzero defect");
  }
  for (double t : grid.t_values) {
    for (Site r : receivers) {
      const double c =
          config.method == Method::Integral
              ? std::abs(transition_amplitude_integral(lattice, config.sender, r, t))
              : asymptotic_concurrence(lattice.alpha, config.sender, r, lattice.defect_site,
                                       lattice.coupling_J * t);
      table.rows.push_back({Cell::real(t), Cell::integer(r), Cell::real(c)});
    }
  }
  return table;
}

Table cmd_transport(const RunConfig& config) {
  const std::vector<double> alphas = alpha_grid(config);
  const std::vector<TransportResult> results =
      transport_sweep(alphas, config.sender, config.spec);
  Table table;
  table.columns = {"alpha", "T", "R", "residual", "t_star"};
  for (const TransportResult& res : results) {
    table.rows.push_back({Cell::real(res.alpha), Cell::real(res.transmission),
                          Cell::real(res.reflection), Cell::real(res.residual),
                          Cell::real(res.t_star)});
  }
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement localization and transport in an XY ring with one field defect",
               "spindefect"};
  app.require_subcommand(1);
  // -h would collide with the --h field flag; subcommands inherit this.
  app.set_help_flag("--help", "Print this help message and exit");

  struct Flags {
    long sites = 0;
    double h = 1.0;
    double J = 1.0;
    double eps = 0.0;
    double alpha = -2.0;
    long defect_site = 0;
    long sender = 0;
    long receiver = 0;
    double t_max = 30.0;
    double dt = 0.1;
    long j_max = 10;
    double alpha_min = -4.0;
    double alpha_max = 4.0;
    double alpha_step = 0.1;
    std::string method = "oracle";
    std::string format = "csv";
    std::string out;
  } flags;

  struct Presence {
    CLI::Option* sites = nullptr;
    CLI::Option* eps = nullptr;
    CLI::Option* alpha = nullptr;
    CLI::Option* sender = nullptr;
    CLI::Option* receiver = nullptr;
    CLI::Option* j_max = nullptr;
  };
  std::map<std::string, Presence> presence;

  const auto add_common = [&](CLI::App* sub) {
    Presence& p = presence[sub->get_name()];
    p.sites = sub->add_option("--sites", flags.sites, "Ring size n_sites (= N+1)");
    sub->add_option("--h", flags.h, "Uniform field h")->capture_default_str();
    sub->add_option("--J", flags.J, "Coupling J")->capture_default_str();
    p.eps = sub->add_option("--eps", flags.eps, "Defect field eps");
    p.alpha = sub->add_option("--alpha", flags.alpha, "Dimensionless defect 2 eps / J (wins over --eps)");
    sub->add_option("--defect-site", flags.defect_site, "Defect site l")->capture_default_str();
    p.sender = sub->add_option("--sender", flags.sender, "Sender site s");
    p.receiver = sub->add_option("--receiver", flags.receiver, "Single receiver site r");
    sub->add_option("--t-max", flags.t_max, "Final time")->capture_default_str();
    sub->add_option("--dt", flags.dt, "Time step")->capture_default_str();
    p.j_max = sub->add_option("--j-max", flags.j_max, "Site range |n - l| <= j_max (evolve: |r| <= j_max)");
    sub->add_option("--alpha-min", flags.alpha_min, "Sweep start")->capture_default_str();
    sub->add_option("--alpha-max", flags.alpha_max, "Sweep end")->capture_default_str();
    sub->add_option("--alpha-step", flags.alpha_step, "Sweep step")->capture_default_str();
    sub->add_option("--method", flags.method, "oracle | integral | asymptotic")
        ->check(CLI::IsMember({"oracle", "integral", "asymptotic"}))
        ->capture_default_str();
    sub->add_option("--format", flags.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", flags.out, "Output path (default: stdout)");
  };
  add_common(app.add_subcommand("spectrum", "Eigenvalues of the finite ring plus band edges and E_loc"));
  add_common(app.add_subcommand("localized", "Bound-state amplitudes and concurrence profile"));
  add_common(app.add_subcommand("evolve", "Concurrence C_r(t) in long (t, r, C_r) format"));
  add_common(app.add_subcommand("transport", "Transmission and reflection coefficients versus alpha"));

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("spindefect");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  RunConfig config;
  config.subcommand = app.get_subcommands().front()->get_name();
  const Presence& p = presence.at(config.subcommand);

  try {
    double alpha = -2.0;
    if (p.alpha->count() > 0) {
      if (p.eps->count() > 0) err << "warning: both --alpha and --eps given; using --alpha\n";
      alpha = flags.alpha;
    } else if (p.eps->count() > 0) {
      alpha = 2.0 * flags.eps / flags.J;
    }
    config.spec = ChainSpec::with_alpha(401, flags.h, flags.J, alpha, flags.defect_site);
    config.sender = p.sender->count() > 0 ? flags.sender
                                          : (config.subcommand == "transport" ? -10 : 0);
    if (p.receiver->count() > 0) config.receiver = flags.receiver;
    config.t_max = flags.t_max;
    config.dt = flags.dt;
    config.j_max = p.j_max->count() > 0 ? flags.j_max : (config.subcommand == "evolve" ? 20 : 10);
    config.alpha_min = flags.alpha_min;
    config.alpha_max = flags.alpha_max;
    config.alpha_step = flags.alpha_step;
    config.method = parse_method(flags.method);
    config.format = flags.format == "json" ? Format::Json : Format::Csv;
    config.out_path = flags.out;

    // Ring size: explicit, or the smallest sound choice for the subcommand.
    long minimum = 3;
    long fallback = 401;
    if (config.subcommand == "spectrum") {
      fallback = 201;
    } else if (config.subcommand == "evolve") {
      if (!(config.t_max > 0.0) || !(config.dt > 0.0)) {
        throw ParameterError("--t-max and --dt must be > 0");
      }
      const long reach = std::max({config.j_max, std::labs(config.sender),
                                   config.receiver ? std::labs(*config.receiver) : 0L,
                                   std::labs(config.spec.defect_site)});
      minimum = oracle_min_sites(config.spec.coupling_J * config.t_max, reach);
      fallback = minimum;
    } else if (config.subcommand == "transport") {
      minimum = transport_min_sites(std::labs(config.sender - config.spec.defect_site));
      fallback = std::max(801L, minimum);
    }
    config.spec.n_sites = p.sites->count() > 0 ? flags.sites : fallback;
    config.spec.validate();
    if (config.spec.n_sites < minimum &&
        (config.subcommand != "evolve" || config.method == Method::Oracle)) {
      std::ostringstream msg;
      msg << "ring too small for this run: n_sites = " << config.spec.n_sites
          << ", minimum n_sites = " << minimum;
      throw ConfigurationError(msg.str());
    }
    if (config.method == Method::Asymptotic && std::abs(config.spec.alpha()) < 5.0) {
      err << "warning: asymptotic formulas assume |alpha| >> 1 (got " << config.spec.alpha()
          << ")\n";
    }

    Table table;
    if (config.subcommand == "spectrum") {
      table = cmd_spectrum(config);
    } else if (config.subcommand == "localized") {
      table = cmd_localized(config);
    } else if (config.subcommand == "evolve") {
      table = cmd_evolve(config);
    } else {
      table = cmd_transport(config);
    }

    const std::string text =
        config.format == Format::Json ? to_json(table, config) : to_csv(table);
    if (config.out_path.empty()) {
      out << text;
    } else {
      write_atomically(config.out_path, text);
    }
    return kSuccess;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const IoError& e) {
    err << "I/O failure: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace spindefect::cli
