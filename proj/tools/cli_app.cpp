#include "cli_app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "smdedge/canny.hpp"
#include "smdedge/detector.hpp"
#include "smdedge/gaussian.hpp"
#include "smdedge/io.hpp"

namespace smdedge::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kUsageError = 2;
constexpr int kIoError = 3;
constexpr int kFormatError = 4;

struct CommonOptions {
  std::string input;
  std::string output;
  std::string metrics_path;
  std::string blur_sigma = "auto";
  DetectorParams params;
  int threads = 1;
};

struct CompareOptions {
  CommonOptions common;
  double canny_low = 50.0;
  double canny_high = 150.0;
  int canny_aperture = 3;
  std::string canny_output;
};

struct SweepOptions {
  CommonOptions common;
  std::vector<double> thres_list;
};

const CLI::Validator OddKernel(
    [](std::string& s) -> std::string {
      try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size() && v >= 1 && v % 2 == 1) return {};
      } catch (...) {
      }
      return std::string("'") + s + "' is not an odd positive integer";
    },
    "ODD");

const CLI::Validator SigmaOrAuto(
    [](std::string& s) -> std::string {
      if (s == "auto") return {};
      try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size() && v > 0.0) return {};
      } catch (...) {
      }
      return std::string("'") + s + "' is neither a positive number nor 'auto'";
    },
    "SIGMA");

void add_common_flags(CLI::App& cmd, CommonOptions& o, bool with_thres) {
  cmd.add_option("-i,--input", o.input, "Input image, binary PGM or PNG")->required();
  cmd.add_option("-o,--output", o.output,
                 "Edge map path (default: <input stem>_edges.pgm)");
  cmd.add_option("-m,--metrics", o.metrics_path,
                 "Write the metrics JSON to this file instead of stdout");
  if (with_thres)
    cmd.add_option("--thres", o.params.thres, "Multiplier on the per-line global std")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  cmd.add_option("--thres2", o.params.thres2,
                 "Per-line mean floor; quieter lines yield no edges")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--thres3", o.params.thres3, "Local window mean floor")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--advance", o.params.advance_on_edge,
                 "Window advance after a detection")
      ->check(CLI::IsMember({1, 4}))
      ->capture_default_str();
  cmd.add_flag_callback(
      "--no-isolated-elimination",
      [&o] { o.params.eliminate_isolated = false; },
      "Skip the isolated-edge cleanup pass");
  cmd.add_option("--blur-kernel", o.params.blur_kernel,
                 "Gaussian kernel size, odd; 1 disables smoothing")
      ->check(OddKernel)
      ->capture_default_str();
  cmd.add_flag_callback(
      "--no-blur", [&o] { o.params.blur_kernel = 1; },
      "Shorthand for --blur-kernel 1");
  cmd.add_option("--blur-sigma", o.blur_sigma, "Gaussian sigma, or 'auto'")
      ->check(SigmaOrAuto)
      ->capture_default_str();
  cmd.add_option("--threads", o.threads, "Worker threads for the line scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// The sigma flag is textual so 'auto' can be spelled out; <= 0 means auto
// downstream.
void resolve_sigma(CommonOptions& o) {
  o.params.blur_sigma = o.blur_sigma == "auto" ? 0.0 : std::stod(o.blur_sigma);
}

fs::path default_output(const fs::path& input, const char* suffix) {
  fs::path out = input;
  out.replace_filename(input.stem().string() + suffix + ".pgm");
  return out;
}

fs::path with_thres_suffix(const fs::path& base, double thres) {
  char tag[32];
  std::snprintf(tag, sizeof tag, "%g", thres);
  fs::path out = base;
  out.replace_filename(base.stem().string() + "_t" + tag +
                       base.extension().string());
  return out;
}

GrayImage to_image(const EdgeMap& map) {
  return {map.rows(), map.cols(), std::vector<std::uint8_t>(map.values())};
}

ordered_json metrics_json(const RunMetrics& m) {
  return ordered_json{
      {"edge_pixel_count", m.edge_pixel_count},
      {"edge_density", m.edge_density},
      {"isolated_removed", m.isolated_removed},
      {"wall_time_ms_blur", m.wall_time_ms_blur},
      {"wall_time_ms_hscan", m.wall_time_ms_hscan},
      {"wall_time_ms_vscan", m.wall_time_ms_vscan},
      {"wall_time_ms_elim", m.wall_time_ms_elim},
  };
}

void emit_metrics(const ordered_json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  write_file(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

int run_detect(CommonOptions& o) {
  resolve_sigma(o);
  const GrayImage img = load_image(o.input);
  RunMetrics m;
  const EdgeMap map = detect(img, o.params, &m, o.threads);
  const fs::path out =
      o.output.empty() ? default_output(o.input, "_edges") : fs::path(o.output);
  save_image(to_image(map), out);
  emit_metrics(metrics_json(m), o.metrics_path);
  return 0;
}

int run_compare(CompareOptions& o) {
  resolve_sigma(o.common);
  const GrayImage img = load_image(o.common.input);

  RunMetrics m;
  const EdgeMap ours = detect(img, o.common.params, &m, o.common.threads);

  // The baseline sees the same smoothing as the detector so the two maps
  // differ only in the detection stage.
  using clock = std::chrono::steady_clock;
  auto t = clock::now();
  const GrayImage pre =
      o.common.params.blur_kernel > 1
          ? gaussian_blur(img,
                          make_kernel(o.common.params.blur_kernel,
                                      o.common.params.blur_sigma),
                          o.common.threads)
          : img;
  const double blur_ms =
      std::chrono::duration<double, std::milli>(clock::now() - t).count();

  t = clock::now();
  const EdgeMap baseline =
      canny(pre, CannyParams{o.canny_low, o.canny_high, o.canny_aperture});
  const double canny_ms =
      std::chrono::duration<double, std::milli>(clock::now() - t).count();

  const fs::path out = o.common.output.empty()
                           ? default_output(o.common.input, "_edges")
                           : fs::path(o.common.output);
  const fs::path canny_out = o.canny_output.empty()
                                 ? default_output(o.common.input, "_canny")
                                 : fs::path(o.canny_output);
  save_image(to_image(ours), out);
  save_image(to_image(baseline), canny_out);

  const double total = static_cast<double>(img.rows()) * img.cols();
  const ordered_json doc{
      {"detector", metrics_json(m)},
      {"canny",
       ordered_json{
           {"edge_pixel_count", baseline.edge_count()},
           {"edge_density", static_cast<double>(baseline.edge_count()) / total},
           {"wall_time_ms_blur", blur_ms},
           {"wall_time_ms_canny", canny_ms},
       }},
  };
  emit_metrics(doc, o.common.metrics_path);
  return 0;
}

int run_sweep(SweepOptions& o) {
  resolve_sigma(o.common);
  const GrayImage img = load_image(o.common.input);
  const fs::path base = o.common.output.empty()
                            ? default_output(o.common.input, "_edges")
                            : fs::path(o.common.output);

  ordered_json rows = ordered_json::array();
  for (double thres : o.thres_list) {
    DetectorParams params = o.common.params;
    params.thres = thres;
    RunMetrics m;
    const EdgeMap map = detect(img, params, &m, o.common.threads);
    save_image(to_image(map), with_thres_suffix(base, thres));
    ordered_json row{{"thres", thres}};
    row.update(metrics_json(m));
    rows.push_back(std::move(row));
  }
  emit_metrics(rows, o.common.metrics_path);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "Scan-line edge detector driven by per-line statistics of "
      "adjacent-pixel intensity differences, with a Canny baseline for "
      "side-by-side comparison"};
  app.require_subcommand(1);

  CommonOptions detect_opts;
  CLI::App* detect_cmd =
      app.add_subcommand("detect", "Run the detector on one image");
  add_common_flags(*detect_cmd, detect_opts, /*with_thres=*/true);

  CompareOptions compare_opts;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Run the detector and the Canny baseline side by side");
  add_common_flags(*compare_cmd, compare_opts.common, /*with_thres=*/true);
  compare_cmd->add_option("--canny-low", compare_opts.canny_low,
                          "Canny low threshold")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  compare_cmd->add_option("--canny-high", compare_opts.canny_high,
                          "Canny high threshold")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  compare_cmd->add_option("--canny-aperture", compare_opts.canny_aperture,
                          "Sobel aperture")
      ->check(CLI::IsMember({3, 5, 7}))
      ->capture_default_str();
  compare_cmd->add_option("--canny-output", compare_opts.canny_output,
                          "Baseline map path (default: <input stem>_canny.pgm)");

  SweepOptions sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Run one detection per thres value, all else fixed");
  add_common_flags(*sweep_cmd, sweep_opts.common, /*with_thres=*/false);
  sweep_cmd
      ->add_option("--thres", sweep_opts.thres_list,
                   "thres values, one detection each")
      ->required()
      ->expected(1, -1)
      ->check(CLI::NonNegativeNumber);

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
    return kUsageError;
  }

  try {
    if (detect_cmd->parsed()) return run_detect(detect_opts);
    if (compare_cmd->parsed()) return run_compare(compare_opts);
    if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormatError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}

}  // namespace smdedge::cli
