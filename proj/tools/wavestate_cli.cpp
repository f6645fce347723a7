// wavestate command-line tool. Everything goes through the public C API; the
// C++ core stays behind the shared library boundary.
#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "wavestate.h"

namespace {

struct stage_args {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
};

int run(const std::string& stage, const stage_args& args) {
    ws_config* cfg = nullptr;
    if (ws_config_create(&cfg) != WS_OK) {
        std::fprintf(stderr, "error: %s\n", ws_last_error());
        return 1;
    }
    int rc = 0;
    if (!args.config_path.empty() && ws_config_load_file(cfg, args.config_path.c_str()) != WS_OK) {
        std::fprintf(stderr, "error: %s\n", ws_last_error());
        rc = 1;
    }
    if (rc == 0) {
        for (const auto& [key, value] : args.overrides) {
            if (ws_config_set(cfg, key.c_str(), value.c_str()) != WS_OK) {
                std::fprintf(stderr, "error: %s\n", ws_last_error());
                rc = 1;
                break;
            }
        }
    }
    if (rc == 0) {
        char summary[4096];
        if (ws_run_stage(cfg, stage.c_str(), summary, sizeof summary) != WS_OK) {
            std::fprintf(stderr, "error: %s\n", ws_last_error());
            rc = 1;
        } else {
            std::printf("%s\n", summary);
        }
    }
    ws_config_destroy(cfg);
    return rc;
}

void add_common(CLI::App* cmd, stage_args& args) {
    cmd->add_option("--config", args.config_path, "config file (key = value sections)")
        ->check(CLI::ExistingFile);
    auto over = [&args](const std::string& key) {
        return [&args, key](const std::string& v) { args.overrides.emplace_back(key, v); };
    };
    cmd->add_option_function<std::string>("--out", over("run.out_dir"), "output directory");
    cmd->add_option_function<std::string>("--seed", over("run.seed"), "global seed");
    cmd->add_option_function<std::string>("--threads", over("run.threads"),
                                          "worker threads (0 = auto)");
    cmd->add_option_function<std::string>("--csv", over("data.csv_path"),
                                          "input CSV of minute bars")
        ->each([&args](const std::string&) { args.overrides.emplace_back("data.source", "csv"); });
    cmd->add_option_function<std::string>("--scheme", over("label.scheme"),
                                          "label scheme (mean_390, y_360_361, y_360_mean, "
                                          "y_360_390, y_mean_mean)");
    cmd->add_option_function<std::string>("--wavelet", over("denoise.wavelet"),
                                          "wavelet (haar, db4)");
    cmd->add_option_function<std::string>("--levels", over("denoise.levels"),
                                          "decomposition levels");
    cmd->add_option_function<std::string>("--shrink", over("denoise.shrink"),
                                          "threshold function (hard, soft)");
    cmd->add_option_function<std::string>("--rule", over("denoise.rule"),
                                          "threshold rule (rigrsure, universal)");
    cmd->add_option_function<std::string>("--indicators", over("features.indicators"),
                                          "comma-separated channels "
                                          "(close,ema,rsi,ma60,correl)");
    cmd->add_option_function<std::string>("--image-size", over("image.height"),
                                          "square image size")
        ->each([&args](const std::string& v) { args.overrides.emplace_back("image.width", v); });
    cmd->add_option_function<std::string>("--net", over("net.kind"),
                                          "network kind (shallow, deep)");
    cmd->add_option_function<std::string>("--epochs", over("train.epochs"), "training epochs");
    cmd->add_option_function<std::string>("--cutoff", over("split.cutoff"),
                                          "train/test cutoff date (YYYY-MM-DD)");
    cmd->add_option_function<std::string>("--test-days", over("split.test_days"),
                                          "use the last N days as the test set");
    cmd->add_option_function<std::string>("--days", over("synth.days"), "synthetic day count");
    cmd->add_option_function<std::string>("--signal-strength", over("synth.signal_strength"),
                                          "planted signal strength in [0,1]");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavestate: market-state classification from denoised wavelet scalograms"};
    app.require_subcommand(1);

    const char* stages[] = {"synth",    "clean", "denoise", "scalogram",
                            "features", "train", "eval",    "pipeline"};
    const char* blurbs[] = {
        "generate seeded synthetic intraday sessions",
        "group, filter, and forward-fill raw minute bars",
        "write denoised close-return series and wavelet coefficient dumps",
        "write power scalograms (tensor + PNG) of denoised close returns",
        "build per-day multi-channel feature tensors",
        "train a CNN on the feature tensors before the cutoff",
        "evaluate the trained model and the random baseline on the test split",
        "run every stage end to end",
    };

    stage_args args[8];
    for (int i = 0; i < 8; ++i) {
        auto* cmd = app.add_subcommand(stages[i], blurbs[i]);
        add_common(cmd, args[i]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    for (int i = 0; i < 8; ++i)
        if (app.get_subcommand(stages[i])->parsed()) return run(stages[i], args[i]);
    return 2;
}
