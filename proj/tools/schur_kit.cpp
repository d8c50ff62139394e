// schur-kit: batch command-line front end for the partition, character,
// coefficient, category and resolution engines.  Every subcommand writes a
// deterministic result to stdout in JSON (default), CSV or plain text.
//
// Exit codes: 0 success, 2 parse/validation error, 3 configured resource
// limit exceeded.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurkit/characters.hpp"
#include "schurkit/lr.hpp"
#include "schurkit/plethysm.hpp"
#include "schurkit/resolutions.hpp"
#include "schurkit/tca.hpp"
#include "schurkit/vobject.hpp"

namespace {

using namespace schurkit;
using nlohmann::json;

struct CliConfig {
  std::size_t cache_size = 1000000;
  int max_table_n = kDefaultCharacterTableLimit;
  int max_degree_default = 12;
  std::string output_format = "json";  // json | csv | text
  unsigned seed = 0;
  int jobs = 1;
};

void load_config_file(CliConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(lineno) +
                            " is not key=value: " + line);
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    try {
      if (key == "cache_size")
        config.cache_size = std::stoull(value);
      else if (key == "max_table_n")
        config.max_table_n = std::stoi(value);
      else if (key == "max_degree_default")
        config.max_degree_default = std::stoi(value);
      else if (key == "output_format")
        config.output_format = value;
      else
        throw ValidationError("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
      throw ValidationError("bad config value for " + key + ": " + value);
    }
  }
  if (config.output_format != "json" && config.output_format != "csv" &&
      config.output_format != "text")
    throw ValidationError("output_format must be json, csv or text");
  if (config.cache_size == 0 || config.max_table_n <= 0 ||
      config.max_degree_default <= 0)
    throw ValidationError("config bounds must be positive");
}

// Object arguments accept a partition ("[2,1]": one simple), inline JSON in
// the decomposition schema, or @file with that JSON.
VObject parse_object_arg(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw ValidationError("cannot open object file " + text.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return VObject::from_json(buffer.str());
  }
  if (!text.empty() && text[0] == '{') return VObject::from_json(text);
  return simple(Partition::parse(text));
}

json partition_json(const Partition& p) { return json(p.parts()); }

// --- printers ----------------------------------------------------------------

void print_scalar(const CliConfig&, const Int& value) {
  // Scalars render identically in every format.
  std::cout << value << "\n";
}

void print_partition(const CliConfig& config, const Partition& p) {
  if (config.output_format == "json")
    std::cout << partition_json(p).dump() << "\n";
  else
    std::cout << p.str() << "\n";
}

void print_object(const CliConfig& config, const VObject& v) {
  if (config.output_format == "json") {
    std::cout << v.to_json() << "\n";
    return;
  }
  if (config.output_format == "csv") {
    std::cout << "partition,multiplicity\n";
    for (const auto& [p, mult] : v.terms())
      std::cout << "\"" << p.str() << "\"," << mult << "\n";
    return;
  }
  for (const auto& [p, mult] : v.terms())
    std::cout << p.str() << ": " << mult << "\n";
  if (v.truncation_degree())
    std::cout << "# truncated at degree " << *v.truncation_degree() << "\n";
}

void print_biobject(const CliConfig& config, const BiVObject& v) {
  if (config.output_format == "json") {
    std::cout << v.to_json() << "\n";
    return;
  }
  if (config.output_format == "csv") {
    std::cout << "left,right,multiplicity\n";
    for (const auto& [key, mult] : v.terms())
      std::cout << "\"" << key.first.str() << "\",\"" << key.second.str()
                << "\"," << mult << "\n";
    return;
  }
  for (const auto& [key, mult] : v.terms())
    std::cout << key.first.str() << " (x) " << key.second.str() << ": " << mult
              << "\n";
}

void print_branch(const CliConfig& config, const BranchDecomposition& b) {
  if (config.output_format == "json") {
    json arr = json::array();
    for (const auto& [key, mult] : b) {
      json entry;
      entry["left"] = partition_json(key.first);
      entry["right"] = partition_json(key.second);
      entry["multiplicity"] = mult.str();
      arr.push_back(entry);
    }
    std::cout << json{{"terms", arr}}.dump() << "\n";
    return;
  }
  if (config.output_format == "csv") {
    std::cout << "left,right,multiplicity\n";
    for (const auto& [key, mult] : b)
      std::cout << "\"" << key.first.str() << "\",\"" << key.second.str()
                << "\"," << mult << "\n";
    return;
  }
  for (const auto& [key, mult] : b)
    std::cout << key.first.str() << " (x) " << key.second.str() << ": " << mult
              << "\n";
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json plan_to_json(const PureResolutionPlan& plan, const PlanValidity& validity) {
  json j;
  j["alpha"] = partition_json(plan.alpha);
  j["beta"] = partition_json(plan.beta);
  j["n_rows"] = plan.n_rows;
  j["e"] = plan.e;
  j["d"] = plan.d;
  json shapes = json::array();
  for (const Partition& s : plan.shapes) shapes.push_back(partition_json(s));
  j["shapes"] = shapes;
  j["valid"] = validity.ok;
  json steps = json::array();
  for (const auto& step : validity.steps) {
    json s;
    s["index"] = step.index;
    s["horizontal_strip"] = step.horizontal_strip;
    s["unique_map"] = step.unique_map;
    s["two_step_zero"] = step.two_step_zero;
    steps.push_back(s);
  }
  j["steps"] = steps;
  return j;
}

// --- subcommand wiring ---------------------------------------------------------

struct Args {
  std::string nu, lambda, mu, rho, alpha, beta, object, inner, degrees, batch;
  std::string partition;
  int rank = -1, n = -1, split_n = -1, split_m = -1, max_degree = -1,
      order = -1, rows = -1, stretch = 1, dim_u = -1, random_count = -1,
      rows_max = 5, size = -1;
  bool enumerate = false, all_splits = false, vertical = false, generic = false;
};

int required_max_degree(const CliConfig& config, int value) {
  return value >= 0 ? value : config.max_degree_default;
}

void run_lr(const CliConfig& config, const Args& args) {
  if (!args.batch.empty()) {
    std::ifstream in(args.batch);
    if (!in) throw ValidationError("cannot open batch file " + args.batch);
    std::vector<std::array<Partition, 3>> queries;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string a, b, c;
      if (!(ls >> a >> b >> c))
        throw ValidationError("batch line needs three partitions: " + line);
      queries.push_back({Partition::parse(a), Partition::parse(b),
                         Partition::parse(c)});
    }
    std::vector<std::string> results(queries.size());
    int jobs = std::max(1, config.jobs);
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < queries.size();
           i = next.fetch_add(1))
        results[i] =
            lr_coefficient(queries[i][0], queries[i][1], queries[i][2]).str();
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const std::string& r : results) std::cout << r << "\n";
    return;
  }
  if (args.nu.empty() || args.lambda.empty() || args.mu.empty())
    throw ValidationError("lr needs --nu, --lambda and --mu (or --batch)");
  LRQuery q{Partition::parse(args.nu), Partition::parse(args.lambda),
            Partition::parse(args.mu)};
  if (args.enumerate) {
    std::vector<LRTableau> fillings = lr_tableaux(q);
    if (config.output_format == "json") {
      json words = json::array();
      for (const LRTableau& t : fillings) words.push_back(t.reading_word_str());
      std::cout << json{{"count", fillings.size()}, {"reading_words", words}}.dump()
                << "\n";
    } else {
      for (const LRTableau& t : fillings) std::cout << t.reading_word_str() << "\n";
    }
    return;
  }
  if (args.stretch != 1) {
    print_scalar(config, stretched_coefficient(q, args.stretch));
    return;
  }
  print_scalar(config, lr_coefficient(q));
}

void run_efw(const CliConfig& config, const Args& args) {
  if (args.random_count > 0) {
    // Property sweep over random (alpha, beta, rows <= rows_max) plans.
    std::mt19937 rng(config.seed);
    std::uniform_int_distribution<int> rows_dist(1, args.rows_max);
    std::uniform_int_distribution<int> part_dist(0, 4);
    std::uniform_int_distribution<int> bump_dist(1, 4);
    int failures = 0;
    for (int trial = 0; trial < args.random_count; ++trial) {
      int rows = rows_dist(rng);
      std::vector<int> alpha_parts;
      int prev = 5;
      for (int i = 0; i < rows; ++i) {
        int p = std::min(prev, part_dist(rng));
        if (p == 0) break;
        alpha_parts.push_back(p);
        prev = p;
      }
      Partition alpha(std::move(alpha_parts));
      std::vector<int> beta_parts = alpha.parts();
      if (beta_parts.empty()) beta_parts.push_back(0);
      beta_parts[0] = alpha.part(1) + bump_dist(rng);
      PureResolutionPlan plan = efw_plan(alpha, Partition(std::move(beta_parts)), rows);
      if (!validate_plan(plan).ok) ++failures;
    }
    if (config.output_format == "json")
      std::cout << json{{"plans", args.random_count}, {"failures", failures}}.dump()
                << "\n";
    else
      std::cout << failures << " failures in " << args.random_count << " plans\n";
    if (failures > 0) throw IntegrityError("random plan sweep found failures");
    return;
  }

  PureResolutionPlan plan = [&] {
    if (!args.degrees.empty()) {
      std::vector<int> degrees;
      std::istringstream ds(args.degrees);
      std::string tok;
      while (std::getline(ds, tok, ',')) {
        try {
          size_t used = 0;
          degrees.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw ValidationError("bad degree '" + tok + "' in --degrees");
        }
      }
      return plan_from_degree_sequence(DegreeSequence(std::move(degrees)));
    }
    if (args.rows < 1)
      throw ValidationError("efw needs --rows with --alpha/--beta");
    return efw_plan(Partition::parse(args.alpha), Partition::parse(args.beta),
                    args.rows);
  }();
  PlanValidity validity = validate_plan(plan);
  if (config.output_format == "json") {
    std::cout << plan_to_json(plan, validity).dump() << "\n";
  } else {
    std::cout << "alpha " << plan.alpha.str() << "  beta " << plan.beta.str()
              << "  rows " << plan.n_rows << "\n";
    std::cout << "d = ";
    for (size_t i = 0; i < plan.d.size(); ++i)
      std::cout << (i ? "," : "") << plan.d[i];
    std::cout << "\nshapes:";
    for (const Partition& s : plan.shapes) std::cout << " " << s.str();
    std::cout << "\nvalid: " << (validity.ok ? "yes" : "no") << "\n";
  }
  if (!validity.ok) throw IntegrityError(validity.message);
}

int dispatch(const CliConfig& config, const std::string& command, const Args& args) {
  if (command == "lr") {
    run_lr(config, args);
  } else if (command == "tensor") {
    print_object(config, tensor(parse_object_arg(args.lambda),
                                parse_object_arg(args.mu)));
  } else if (command == "kron") {
    print_scalar(config, kronecker(Partition::parse(args.lambda),
                                   Partition::parse(args.mu),
                                   Partition::parse(args.nu)));
  } else if (command == "pieri") {
    VObject out;
    for (const Partition& p :
         add_strips(Partition::parse(args.lambda), args.size,
                    args.vertical ? StripKind::Vertical : StripKind::Horizontal))
      out.add(p, 1);
    print_object(config, out);
  } else if (command == "branch") {
    Partition nu = Partition::parse(args.nu);
    if (args.all_splits) {
      print_branch(config, restrict_branch_all(nu));
    } else {
      if (args.split_n < 0 || args.split_m < 0)
        throw ValidationError("branch needs --split-n and --split-m (or --all)");
      print_branch(config, restrict_branch(nu, args.split_n, args.split_m));
    }
  } else if (command == "dim") {
    if (!args.nu.empty()) {  // --gl PARTITION
      if (args.rank < 0) throw ValidationError("dim --gl needs --rank");
      print_scalar(config, dim_gl(Partition::parse(args.nu), args.rank));
    } else if (args.lambda.empty()) {
      throw ValidationError("dim needs --sym or --gl");
    } else {
      Partition lambda = Partition::parse(args.lambda);
      print_scalar(config, args.generic ? dim_sym_det(lambda) : dim_sym(lambda));
    }
  } else if (command == "char") {
    print_scalar(config, mn_character(Partition::parse(args.lambda),
                                      Partition::parse(args.rho)));
  } else if (command == "table") {
    CharacterTable table = character_table(args.n, config.max_table_n);
    if (config.output_format == "json") {
      json labels = json::array();
      for (const Partition& p : table.irreps()) labels.push_back(partition_json(p));
      json values = json::array();
      for (size_t i = 0; i < table.irreps().size(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < table.classes().size(); ++j)
          row.push_back(table.value(i, j).str());
        values.push_back(row);
      }
      std::cout << json{{"n", table.n()}, {"labels", labels}, {"values", values}}.dump()
                << "\n";
    } else {
      std::cout << table.to_csv();
    }
  } else if (command == "plethysm") {
    print_object(config,
                 compose(parse_object_arg(args.lambda), parse_object_arg(args.mu),
                         required_max_degree(config, args.max_degree)));
  } else if (command == "derive") {
    VObject v = parse_object_arg(args.object);
    if (args.nu.empty())
      print_object(config, schur_derivative(v));
    else
      print_object(config, higher_derivative(Partition::parse(args.nu), v));
  } else if (command == "coadd") {
    print_biobject(config, coaddition(parse_object_arg(args.object)));
  } else if (command == "comult") {
    print_biobject(config, comultiplication(parse_object_arg(args.object)));
  } else if (command == "transpose") {
    if (args.partition.empty() && args.object.empty())
      throw ValidationError("transpose needs --partition or --object");
    if (!args.partition.empty())
      print_partition(config, transpose(Partition::parse(args.partition)));
    else
      print_object(config, transpose_object(parse_object_arg(args.object)));
  } else if (command == "hilbert") {
    std::vector<Rational> h = hilbert_series(parse_object_arg(args.object),
                                             required_max_degree(config, args.order));
    if (config.output_format == "json") {
      json arr = json::array();
      for (const Rational& r : h) arr.push_back(rational_str(r));
      std::cout << json{{"coefficients", arr}}.dump() << "\n";
    } else if (config.output_format == "csv") {
      std::cout << "degree,coefficient\n";
      for (size_t n = 0; n < h.size(); ++n)
        std::cout << n << "," << rational_str(h[n]) << "\n";
    } else {
      for (size_t n = 0; n < h.size(); ++n)
        std::cout << "t^" << n << ": " << rational_str(h[n]) << "\n";
    }
  } else if (command == "ehilbert") {
    EnhancedSeries e = enhanced_hilbert(parse_object_arg(args.object),
                                        required_max_degree(config, args.order));
    if (config.output_format == "json") {
      json arr = json::array();
      for (const auto& [rho, coeff] : e) {
        json entry;
        entry["class"] = partition_json(rho);
        entry["coefficient"] = rational_str(coeff);
        arr.push_back(entry);
      }
      std::cout << json{{"terms", arr}}.dump() << "\n";
    } else if (config.output_format == "csv") {
      std::cout << "class,coefficient\n";
      for (const auto& [rho, coeff] : e)
        std::cout << "\"" << rho.str() << "\"," << rational_str(coeff) << "\n";
    } else {
      for (const auto& [rho, coeff] : e)
        std::cout << "t^" << rho.str() << ": " << rational_str(coeff) << "\n";
    }
  } else if (command == "tca-decompose") {
    if (args.dim_u <= 0 && args.object.empty())
      throw ValidationError("tca-decompose needs --generators or --dim-u");
    PolynomialTcaSpec spec = args.dim_u > 0
                                 ? PolynomialTcaSpec::multivariate(args.dim_u)
                                 : PolynomialTcaSpec(parse_object_arg(args.object));
    int depth = required_max_degree(config, args.max_degree);
    print_object(config, args.generic ? tca_decompose_generic(spec, depth)
                                      : tca_decompose(spec, depth));
  } else if (command == "efw") {
    run_efw(config, args);
  } else if (command == "betti") {
    PureResolutionPlan plan =
        efw_plan(Partition::parse(args.alpha), Partition::parse(args.beta), args.rows);
    if (args.rank < 0) throw ValidationError("betti needs --rank");
    BettiTable table = plan_betti_table(plan, args.rank);
    if (config.output_format == "json") {
      json arr = json::array();
      for (size_t i = 0; i < table.size(); ++i)
        arr.push_back(json{{"i", i},
                           {"degree", table[i].first},
                           {"rank", table[i].second.str()}});
      std::cout << json{{"betti", arr}}.dump() << "\n";
    } else if (config.output_format == "csv") {
      std::cout << betti_table_csv(table);
    } else {
      std::cout << betti_table_text(table);
    }
  } else if (command == "koszul-check") {
    int depth = required_max_degree(config, args.max_degree);
    if (args.rank < 1) throw ValidationError("koszul-check needs --rank >= 1");
    GradedComplex complex = koszul_complex(args.rank, depth);
    HomologyReport report = exactness_report(complex);
    if (config.output_format == "json")
      std::cout << report.to_json() << "\n";
    else
      std::cout << report.summary() << "\n";
  } else if (command == "matchings") {
    VObject m = matchings(args.n);
    print_object(config, m);
  } else {
    throw ValidationError("unknown subcommand " + command);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schur-kit: partition combinatorics, symmetric-group and GL "
               "representation data, category-level operations, and "
               "finite-rank resolutions"};
  app.require_subcommand(1);

  CliConfig config;
  if (const char* env = std::getenv("SCHURKIT_CONFIG")) {
    try {
      load_config_file(config, env);
    } catch (const ValidationError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  Args args;
  app.add_option("--format", config.output_format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--cache-size", config.cache_size,
                 "Coefficient cache capacity (entries)");
  app.add_option("--max-table-n", config.max_table_n,
                 "Largest degree for full character tables");
  app.add_option("--seed", config.seed, "Seed for sampling subcommands");
  app.add_option("--jobs", config.jobs, "Worker threads for batch files");

  CLI::App* lr = app.add_subcommand(
      "lr",
      "Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of "
      "semistandard lattice-word fillings of nu/lambda with content mu; 0 "
      "when sizes or containments fail");
  lr->add_option("--nu", args.nu, "Outer partition, e.g. [5,3,2,1]");
  lr->add_option("--lambda", args.lambda, "First factor");
  lr->add_option("--mu", args.mu, "Second factor");
  lr->add_flag("--enumerate", args.enumerate,
               "List the fillings' reading words instead of counting");
  lr->add_option("--stretch", args.stretch,
                 "Scale all three partitions by N first");
  lr->add_option("--batch", args.batch,
                 "File with one 'nu lambda mu' query per line");

  CLI::App* tensor_cmd = app.add_subcommand(
      "tensor",
      "Graded tensor product decomposition; coefficient of S_nu is "
      "sum of c^nu_{lambda,mu} over the factors' terms");
  tensor_cmd->add_option("--lambda", args.lambda, "Left factor (partition or JSON)")
      ->required();
  tensor_cmd->add_option("--mu", args.mu, "Right factor (partition or JSON)")
      ->required();

  CLI::App* kron = app.add_subcommand(
      "kron",
      "Kronecker coefficient g_{lambda,mu,nu}: multiplicity in the "
      "degreewise tensor product; symmetric in all three arguments; 0 on "
      "size mismatch");
  kron->add_option("--lambda", args.lambda)->required();
  kron->add_option("--mu", args.mu)->required();
  kron->add_option("--nu", args.nu)->required();

  CLI::App* pieri = app.add_subcommand(
      "pieri",
      "All partitions obtained by adding a horizontal (default) or vertical "
      "strip of the given size, in lexicographically decreasing order");
  pieri->add_option("--lambda", args.lambda)->required();
  pieri->add_option("--size", args.size, "Strip size (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  pieri->add_flag("--vertical", args.vertical, "Vertical strips instead");

  CLI::App* branch = app.add_subcommand(
      "branch",
      "Restriction multiplicities of nu to a product of two smaller groups: "
      "coefficient of (lambda, mu) is c^nu_{lambda,mu}; needs a split "
      "summing to |nu|, or --all for every split");
  branch->add_option("--nu", args.nu)->required();
  branch->add_option("--split-n", args.split_n, "Size of the first part");
  branch->add_option("--split-m", args.split_m, "Size of the second part");
  branch->add_flag("--all", args.all_splits, "All splits at once");

  CLI::App* dim = app.add_subcommand(
      "dim",
      "Dimension of the irreducible indexed by a partition: --sym for the "
      "hook-length count (--det switches to the determinantal evaluator), "
      "--gl with --rank for the hook-content dimension at a finite rank");
  dim->add_option("--sym,--lambda", args.lambda, "Symmetric-group dimension");
  dim->add_option("--gl", args.nu, "Finite-rank dimension of this partition");
  dim->add_option("--rank", args.rank, "Rank n for --gl");
  dim->add_flag("--det", args.generic, "Use the determinantal evaluator");

  CLI::App* chr = app.add_subcommand(
      "char",
      "Irreducible character value at a conjugacy class, by border-strip "
      "removal; requires |lambda| = |rho|");
  chr->add_option("--lambda", args.lambda)->required();
  chr->add_option("--rho", args.rho, "Cycle type of the class")->required();

  CLI::App* table = app.add_subcommand(
      "table",
      "Complete character table; rows and columns in reverse-lexicographic "
      "order; degree capped by --max-table-n (default 14)");
  table->add_option("--n", args.n)->required();

  CLI::App* plethysm_cmd = app.add_subcommand(
      "plethysm",
      "Composition (outer o inner) truncated at --max-degree; the inner "
      "object must have no degree-0 term");
  plethysm_cmd->add_option("--outer", args.lambda)->required();
  plethysm_cmd->add_option("--inner", args.mu)->required();
  plethysm_cmd->add_option("--max-degree", args.max_degree,
                           "Truncation degree (default from config)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* derive = app.add_subcommand(
      "derive",
      "Derivative of an object: corner removals by default, or the skewing "
      "operator against --nu");
  derive->add_option("--object", args.object, "Partition or decomposition JSON")
      ->required();
  derive->add_option("--nu", args.nu, "Skew by this partition");

  CLI::App* coadd = app.add_subcommand(
      "coadd",
      "Two-variable expansion of an object under splitting into a direct "
      "sum; coefficients are the branching numbers");
  coadd->add_option("--object", args.object)->required();

  CLI::App* comult = app.add_subcommand(
      "comult",
      "Two-variable expansion under a tensor-product substitution; "
      "coefficients are Kronecker numbers");
  comult->add_option("--object", args.object)->required();

  CLI::App* transpose_cmd = app.add_subcommand(
      "transpose", "Transpose of a partition (--partition) or of every term "
                   "of an object (--object)");
  transpose_cmd->add_option("--partition", args.partition);
  transpose_cmd->add_option("--object", args.object);

  CLI::App* hilbert = app.add_subcommand(
      "hilbert",
      "Exponential Hilbert series coefficients dim(V_n)/n! for n <= order");
  hilbert->add_option("--object", args.object)->required();
  hilbert->add_option("--order", args.order, "Highest degree (default from config)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* ehilbert = app.add_subcommand(
      "ehilbert",
      "Enhanced Hilbert series: coefficient of t^rho is the trace of the "
      "class rho divided by rho!");
  ehilbert->add_option("--object", args.object)->required();
  ehilbert->add_option("--order", args.order)->check(CLI::NonNegativeNumber);

  CLI::App* tca = app.add_subcommand(
      "tca-decompose",
      "Truncated decomposition of the free commutative algebra on the given "
      "generators; --dim-u selects the degree-1 multivariate algebra with "
      "its closed-form decomposition");
  tca->add_option("--generators", args.object, "Generator object");
  tca->add_option("--dim-u", args.dim_u, "Use U<1> generators with dim U = u");
  tca->add_option("--max-degree", args.max_degree)->check(CLI::NonNegativeNumber);
  tca->add_flag("--generic", args.generic, "Force the composition route");

  CLI::App* efw = app.add_subcommand(
      "efw",
      "Equivariant pure-resolution plan from (alpha, beta, rows) or from a "
      "degree sequence; reports the step certificates (strip shape, unique "
      "connecting map, vanishing two-step coefficient)");
  efw->add_option("--alpha", args.alpha);
  efw->add_option("--beta", args.beta);
  efw->add_option("--rows", args.rows);
  efw->add_option("--degrees", args.degrees, "Comma-separated degree sequence");
  efw->add_option("--random", args.random_count,
                  "Validate this many random plans (uses --seed)");
  efw->add_option("--rows-max", args.rows_max, "Row bound for --random");

  CLI::App* betti = app.add_subcommand(
      "betti", "Betti table of a plan evaluated at a finite rank: degree and "
               "free-module rank per homological index");
  betti->add_option("--alpha", args.alpha)->required();
  betti->add_option("--beta", args.beta)->required();
  betti->add_option("--rows", args.rows)->required();
  betti->add_option("--rank", args.rank)->required();

  CLI::App* koszul = app.add_subcommand(
      "koszul-check",
      "Build the Koszul complex at the given rank up to an internal degree "
      "and report all nonzero homology (expected: only H_0 in degree 0)");
  koszul->add_option("--rank", args.rank)->required();
  koszul->add_option("--max-degree", args.max_degree)->check(CLI::NonNegativeNumber);

  CLI::App* matchings_cmd = app.add_subcommand(
      "matchings", "Permutation object of perfect matchings on 2n points");
  matchings_cmd->add_option("--n", args.n)->required();

  // Global options (format, cache size, ...) may appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  set_lr_cache_capacity(config.cache_size);

  try {
    return dispatch(config, app.get_subcommands().front()->get_name(), args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
