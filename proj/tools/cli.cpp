#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "scaff/bench.hpp"
#include "scaff/casegen.hpp"
#include "scaff/error.hpp"
#include "scaff/fill.hpp"
#include "scaff/image_io.hpp"
#include "scaff/metrics.hpp"

namespace scaff::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kRed = "\033[31m";
constexpr const char* kReset = "\033[0m";

void report(const Streams& s, const std::string& message) {
  if (s.color) {
    s.err << kRed << "error:" << kReset << ' ' << message << '\n';
  } else {
    s.err << "error: " << message << '\n';
  }
}

int exit_code_for(const Error& e) { return e.is_io() ? kExitIo : kExitValidation; }

struct PaletteFlags {
  int background = 0;
  int boundary = 255;
  int exterior_label = 80;
  int interior_label = 128;
  int mask = 255;

  Palette palette() const {
    return {static_cast<Pixel>(background), static_cast<Pixel>(boundary),
            static_cast<Pixel>(exterior_label), static_cast<Pixel>(interior_label),
            static_cast<Pixel>(mask)};
  }
};

void add_palette_flags(CLI::App* app, PaletteFlags& flags) {
  const auto byte = CLI::Range(0, 255);
  app->add_option("--background", flags.background, "Background colour")->check(byte)->capture_default_str();
  app->add_option("--boundary", flags.boundary, "Boundary colour")->check(byte)->capture_default_str();
  app->add_option("--exterior-label", flags.exterior_label, "Temporary exterior label colour")
      ->check(byte)->capture_default_str();
  app->add_option("--interior-label", flags.interior_label, "Temporary interior label colour")
      ->check(byte)->capture_default_str();
  app->add_option("--mask", flags.mask, "Output mask colour")->check(byte)->capture_default_str();
}

FillAlgorithm algorithm_from(const std::string& name) {
  // The option is restricted by CLI::IsMember, so parsing cannot fail here.
  return *parse_fill_algorithm(name);
}

FillConfig make_config(const std::string& algorithm, const PaletteFlags& palette,
                       std::optional<int> threshold) {
  FillConfig config;
  config.algorithm = algorithm_from(algorithm);
  config.palette = palette.palette();
  if (threshold) {
    config.threshold = static_cast<Pixel>(*threshold);
    config.strict = false;
  }
  config.validate();
  return config;
}

void fill_file(const fs::path& input, const fs::path& output, const FillConfig& config) {
  const Raster img = decode_image(input, config);
  encode_image(fill(config.algorithm, img, config.palette), output);
}

bool is_image_file(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".pgm";
}

std::vector<fs::path> list_images(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo, "not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "cannot create directory " + dir.string());
  }
}

template <typename Writer>
void write_text(const std::string& path, Writer&& writer) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  writer(out);
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path);
}

// ---------------------------------------------------------------------------
// Subcommands

struct FillArgs {
  std::string algorithm;
  std::string input;
  std::string output;
  std::optional<int> threshold;
  PaletteFlags palette;
};

int run_fill(const FillArgs& args, const Streams&) {
  fill_file(args.input, args.output, make_config(args.algorithm, args.palette, args.threshold));
  return kExitOk;
}

struct BatchArgs {
  std::string algorithm;
  std::string input_dir;
  std::string output_dir;
  int jobs = 1;
  std::optional<int> threshold;
  PaletteFlags palette;
};

struct FileResult {
  bool ok = true;
  int code = kExitOk;
  std::string message;
};

int run_batch(const BatchArgs& args, const Streams& s) {
  const FillConfig config = make_config(args.algorithm, args.palette, args.threshold);
  const auto files = list_images(args.input_dir);
  ensure_directory(args.output_dir);

  // Each worker owns its rasters; results land in per-file slots.
  std::vector<FileResult> results(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        fill_file(files[i], fs::path(args.output_dir) / files[i].filename(), config);
      } catch (const Error& e) {
        results[i] = {false, exit_code_for(e), e.what()};
      } catch (const std::exception& e) {
        results[i] = {false, kExitIo, e.what()};
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(args.jobs), std::max<std::size_t>(files.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kExitOk;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (results[i].ok) continue;
    ++failed;
    if (code == kExitOk) code = results[i].code;
    report(s, files[i].filename().string() + ": " + results[i].message);
  }
  s.out << "batch: " << files.size() - failed << " of " << files.size() << " files filled\n";
  return code;
}

struct GenArgs {
  std::string which = "all";
  int size = 200;
  int thickness = 1;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& args, const Streams& s) {
  std::vector<int> ids;
  if (args.which == "all") {
    ids = {1, 2, 3, 4, 5, 6, 7, 8};
  } else {
    ids = {CaseDescriptor::from_id(std::stoi(args.which)).case_id};
  }
  // Generate before touching the filesystem so bad sizes fail cleanly.
  std::vector<GeneratedCase> cases;
  for (const int id : ids) cases.push_back(generate_case(id, args.size, args.thickness, args.seed));
  ensure_directory(args.out);
  for (const GeneratedCase& c : cases) {
    const std::string stem = "case" + std::to_string(c.descriptor.case_id);
    encode_image(c.boundary_image, fs::path(args.out) / (stem + "_boundary.png"));
    encode_image(c.ground_truth_mask, fs::path(args.out) / (stem + "_gt.png"));
  }
  s.out << "gen: wrote " << cases.size() << " case(s) to " << args.out << '\n';
  return kExitOk;
}

struct BenchArgs {
  std::vector<int> sizes;
  std::vector<int> cases = {1, 2, 3, 4, 5, 6, 7, 8};
  int repeats = 3;
  std::vector<std::string> algorithms = {"efci", "scaff"};
  int thickness = 1;
  std::uint64_t seed = 1;
  std::string csv;
  std::string json;
};

int run_bench_command(const BenchArgs& args, const Streams& s) {
  BenchOptions options;
  options.sizes = args.sizes;
  options.cases = args.cases;
  options.repeats = args.repeats;
  options.thickness = args.thickness;
  options.seed = args.seed;
  options.algorithms.clear();
  for (const auto& name : args.algorithms) options.algorithms.push_back(algorithm_from(name));

  const auto records = run_bench(options);
  if (!args.csv.empty()) write_text(args.csv, [&](std::ostream& o) { write_bench_csv(o, records); });
  if (!args.json.empty()) write_text(args.json, [&](std::ostream& o) { write_bench_json(o, records); });
  if (args.csv.empty() && args.json.empty()) write_bench_csv(s.out, records);

  for (const FillAlgorithm algorithm : options.algorithms) {
    const auto points = mean_points(records, algorithm);
    s.err << to_string(algorithm) << ":";
    for (const FitPoint& p : points) s.err << ' ' << p.seconds;
    if (points.size() >= 3) {
      const LinearFit fit = linear_fit(points);
      s.err << "  slope=" << fit.slope << " intercept=" << fit.intercept
            << " adj_r2=" << fit.adj_r2;
    }
    s.err << '\n';
  }
  return kExitOk;
}

struct EvalArgs {
  std::string pred_dir;
  std::string gt_dir;
  int positive = 255;
  std::string csv;
};

int run_eval(const EvalArgs& args, const Streams& s) {
  const auto files = list_images(args.pred_dir);
  std::ostringstream table;
  table << std::fixed << std::setprecision(9);
  table << "file,tp,fp,fn,tn,f1,mae\n";

  int code = kExitOk;
  double f1_sum = 0.0;
  double mae_sum = 0.0;
  std::size_t scored = 0;
  for (const auto& pred_path : files) {
    const fs::path gt_path = fs::path(args.gt_dir) / pred_path.filename();
    try {
      const Raster pred = read_grayscale(pred_path);
      const Raster gt = read_grayscale(gt_path);
      const MetricReport r = evaluate(pred, gt, static_cast<Pixel>(args.positive));
      table << pred_path.filename().string() << ',' << r.counts.tp << ',' << r.counts.fp << ','
            << r.counts.fn << ',' << r.counts.tn << ',' << r.f1 << ',' << r.mae << '\n';
      f1_sum += r.f1;
      mae_sum += r.mae;
      ++scored;
    } catch (const Error& e) {
      if (code == kExitOk) code = exit_code_for(e);
      report(s, pred_path.filename().string() + ": " + e.what());
    }
  }
  if (scored > 0) {
    table << "mean,,,,," << f1_sum / static_cast<double>(scored) << ','
          << mae_sum / static_cast<double>(scored) << '\n';
  }
  if (args.csv.empty()) {
    s.out << table.str();
  } else {
    write_text(args.csv, [&](std::ostream& o) { o << table.str(); });
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, const Streams& streams) {
  CLI::App app{"Region filling for boundary-only images (EFCI and scan-flood fill)", "scaff"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  const std::vector<std::string> algorithm_names = {"efci", "scaff"};

  FillArgs fill_args;
  auto* fill_cmd = app.add_subcommand("fill", "Fill one boundary image");
  fill_cmd->add_option("--algorithm", fill_args.algorithm, "efci or scaff")
      ->required()->check(CLI::IsMember(algorithm_names));
  fill_cmd->add_option("--input", fill_args.input, "Boundary image (PNG or PGM)")->required();
  fill_cmd->add_option("--output", fill_args.output, "Output mask (.pgm writes PGM, else PNG)")
      ->required();
  fill_cmd->add_option("--threshold", fill_args.threshold,
                       "Binarize input: values >= T become boundary")->check(CLI::Range(0, 255));
  add_palette_flags(fill_cmd, fill_args.palette);

  BatchArgs batch_args;
  auto* batch_cmd = app.add_subcommand("batch", "Fill every PNG/PGM in a directory");
  batch_cmd->add_option("--algorithm", batch_args.algorithm, "efci or scaff")
      ->required()->check(CLI::IsMember(algorithm_names));
  batch_cmd->add_option("--input-dir", batch_args.input_dir, "Directory of boundary images")
      ->required();
  batch_cmd->add_option("--output-dir", batch_args.output_dir, "Where filled masks are written")
      ->required();
  batch_cmd->add_option("--jobs", batch_args.jobs, "Parallel workers")
      ->check(CLI::Range(1, 1024))->capture_default_str();
  batch_cmd->add_option("--threshold", batch_args.threshold,
                        "Binarize input: values >= T become boundary")->check(CLI::Range(0, 255));
  add_palette_flags(batch_cmd, batch_args.palette);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write generated boundary/ground-truth pairs");
  gen_cmd->add_option("--case", gen_args.which, "Case id 1..8 or 'all'")
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "7", "8", "all"}))
      ->capture_default_str();
  gen_cmd->add_option("--size", gen_args.size, "Edge length in pixels")->required();
  gen_cmd->add_option("--thickness", gen_args.thickness, "Boundary thickness")
      ->capture_default_str();
  gen_cmd->add_option("--rng-seed", gen_args.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_args.out, "Output directory")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time EFCI and SCAFF across image sizes");
  bench_cmd->add_option("--sizes", bench_args.sizes, "Comma-separated edge lengths")
      ->required()->delimiter(',');
  bench_cmd->add_option("--cases", bench_args.cases, "Comma-separated case ids")
      ->delimiter(',')->check(CLI::Range(1, 8));
  bench_cmd->add_option("--repeats", bench_args.repeats, "Timed runs per case")
      ->check(CLI::Range(1, 1000000))->capture_default_str();
  bench_cmd->add_option("--algorithms", bench_args.algorithms, "Comma-separated algorithms")
      ->delimiter(',')->check(CLI::IsMember(algorithm_names));
  bench_cmd->add_option("--thickness", bench_args.thickness, "Boundary thickness")
      ->capture_default_str();
  bench_cmd->add_option("--rng-seed", bench_args.seed, "Generator seed")->capture_default_str();
  bench_cmd->add_option("--csv", bench_args.csv, "Per-run CSV output path");
  bench_cmd->add_option("--json", bench_args.json, "Linear-fit JSON summary path");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand(
      "eval",
      "Score predicted masks against ground truth (F1, MAE per image, mean of per-image scores)");
  eval_cmd->add_option("--pred-dir", eval_args.pred_dir, "Predicted masks")->required();
  eval_cmd->add_option("--gt-dir", eval_args.gt_dir, "Ground-truth masks with matching names")
      ->required();
  eval_cmd->add_option("--positive", eval_args.positive, "Foreground value")
      ->check(CLI::Range(0, 255))->capture_default_str();
  eval_cmd->add_option("--csv", eval_args.csv, "Output CSV path (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, streams.out, streams.err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*fill_cmd) return run_fill(fill_args, streams);
    if (*batch_cmd) return run_batch(batch_args, streams);
    if (*gen_cmd) return run_gen(gen_args, streams);
    if (*bench_cmd) return run_bench_command(bench_args, streams);
    if (*eval_cmd) return run_eval(eval_args, streams);
  } catch (const Error& e) {
    report(streams, e.what());
    return exit_code_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    report(streams, e.what());
    return kExitIo;
  }
  return kExitValidation;
}

}  // namespace scaff::cli
