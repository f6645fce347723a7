// Pipeline configuration: a flat "section.key = value" store with an INI-style
// text form. The effective config is echoed into every run directory so a run
// can be reproduced from its outputs alone.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cnn.hpp"
#include "features.hpp"
#include "synth.hpp"

namespace ws {

class config {
public:
    config();  // defaults for every known key

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;

    std::string get_str(const std::string& key) const { return get(key); }
    std::int64_t get_int(const std::string& key) const;
    double get_double(const std::string& key) const;
    bool get_bool(const std::string& key) const;

    void load_file(const std::string& path);
    void load_text(const std::string& text, const std::string& origin = "<config>");
    std::string serialize() const;  // canonical: sorted sections and keys
    void save_file(const std::string& path) const;

    // fnv-1a hex digest of every key except run.out_dir and run.threads,
    // which affect where and how fast a run happens but not its results
    std::string hash() const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

    // typed views, validated on access
    ts::synth_config synth() const;
    feat::feature_config features() const;
    cnn::train_config train() const;
    denoise::config den() const;

    std::uint64_t seed() const;
    std::uint64_t stage_seed(const std::string& stage) const;
    std::string out_dir() const;

private:
    std::map<std::string, std::string> kv_;
};

std::vector<std::string> split_list(const std::string& csv);

} // namespace ws
