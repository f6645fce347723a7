#include "cnn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "rng.hpp"

namespace ws::cnn {

namespace {

struct tape_entry {
    std::vector<double> out;      // layer output
    std::vector<int> argmax;      // maxpool winners
    std::vector<double> padded;   // conv input with padding applied
};

shape3 flat(int n) { return {n, 1, 1}; }

void conv_forward(const layer_spec& sp, const layer_params& p, const std::vector<double>& in,
                  shape3 is, shape3 os, tape_entry& t) {
    const int ph = is.h + 2 * sp.pad, pw = is.w + 2 * sp.pad;
    t.padded.assign(static_cast<std::size_t>(is.c * ph * pw), 0.0);
    for (int c = 0; c < is.c; ++c)
        for (int y = 0; y < is.h; ++y)
            for (int x = 0; x < is.w; ++x)
                t.padded[static_cast<std::size_t>((c * ph + y + sp.pad) * pw + x + sp.pad)] =
                    in[static_cast<std::size_t>((c * is.h + y) * is.w + x)];

    t.out.assign(static_cast<std::size_t>(os.size()), 0.0);
    for (int oc = 0; oc < os.c; ++oc) {
        const std::size_t wbase =
            static_cast<std::size_t>(oc) * static_cast<std::size_t>(is.c * sp.kh * sp.kw);
        for (int oy = 0; oy < os.h; ++oy) {
            for (int ox = 0; ox < os.w; ++ox) {
                double acc = p.bias[static_cast<std::size_t>(oc)];
                for (int ic = 0; ic < is.c; ++ic) {
                    for (int ky = 0; ky < sp.kh; ++ky) {
                        const int iy = oy * sp.stride + ky;
                        const std::size_t prow =
                            static_cast<std::size_t>((ic * ph + iy) * pw + ox * sp.stride);
                        const std::size_t wrow = wbase + static_cast<std::size_t>(
                                                             (ic * sp.kh + ky) * sp.kw);
                        for (int kx = 0; kx < sp.kw; ++kx)
                            acc += static_cast<double>(p.weight[wrow + static_cast<std::size_t>(
                                                                           kx)]) *
                                   t.padded[prow + static_cast<std::size_t>(kx)];
                    }
                }
                t.out[static_cast<std::size_t>((oc * os.h + oy) * os.w + ox)] = acc;
            }
        }
    }
}

void conv_backward(const layer_spec& sp, const layer_params& p, const tape_entry& t,
                   const std::vector<double>& dout, shape3 is, shape3 os,
                   std::vector<double>& din, std::vector<double>& dw, std::vector<double>& db) {
    const int ph = is.h + 2 * sp.pad, pw = is.w + 2 * sp.pad;
    std::vector<double> dpad(static_cast<std::size_t>(is.c * ph * pw), 0.0);

    for (int oc = 0; oc < os.c; ++oc) {
        const std::size_t wbase =
            static_cast<std::size_t>(oc) * static_cast<std::size_t>(is.c * sp.kh * sp.kw);
        for (int oy = 0; oy < os.h; ++oy) {
            for (int ox = 0; ox < os.w; ++ox) {
                const double g =
                    dout[static_cast<std::size_t>((oc * os.h + oy) * os.w + ox)];
                db[static_cast<std::size_t>(oc)] += g;
                for (int ic = 0; ic < is.c; ++ic) {
                    for (int ky = 0; ky < sp.kh; ++ky) {
                        const int iy = oy * sp.stride + ky;
                        const std::size_t prow =
                            static_cast<std::size_t>((ic * ph + iy) * pw + ox * sp.stride);
                        const std::size_t wrow = wbase + static_cast<std::size_t>(
                                                             (ic * sp.kh + ky) * sp.kw);
                        for (int kx = 0; kx < sp.kw; ++kx) {
                            dw[wrow + static_cast<std::size_t>(kx)] +=
                                g * t.padded[prow + static_cast<std::size_t>(kx)];
                            dpad[prow + static_cast<std::size_t>(kx)] +=
                                g * static_cast<double>(
                                        p.weight[wrow + static_cast<std::size_t>(kx)]);
                        }
                    }
                }
            }
        }
    }

    din.assign(static_cast<std::size_t>(is.size()), 0.0);
    for (int c = 0; c < is.c; ++c)
        for (int y = 0; y < is.h; ++y)
            for (int x = 0; x < is.w; ++x)
                din[static_cast<std::size_t>((c * is.h + y) * is.w + x)] =
                    dpad[static_cast<std::size_t>((c * ph + y + sp.pad) * pw + x + sp.pad)];
}

void pool_forward(const layer_spec& sp, const std::vector<double>& in, shape3 is, shape3 os,
                  tape_entry& t) {
    const int stride = sp.pool_stride;
    t.out.assign(static_cast<std::size_t>(os.size()), 0.0);
    t.argmax.assign(static_cast<std::size_t>(os.size()), 0);
    for (int c = 0; c < os.c; ++c) {
        for (int oy = 0; oy < os.h; ++oy) {
            for (int ox = 0; ox < os.w; ++ox) {
                double best = -1e300;
                int best_idx = -1;
                for (int ky = 0; ky < sp.window; ++ky) {
                    for (int kx = 0; kx < sp.window; ++kx) {
                        int iy = oy * stride + ky, ix = ox * stride + kx;
                        int idx = (c * is.h + iy) * is.w + ix;
                        double v = in[static_cast<std::size_t>(idx)];
                        if (v > best) {  // strict: first index wins ties
                            best = v;
                            best_idx = idx;
                        }
                    }
                }
                std::size_t o = static_cast<std::size_t>((c * os.h + oy) * os.w + ox);
                t.out[o] = best;
                t.argmax[o] = best_idx;
            }
        }
    }
}

double he_sigma(const layer_spec& sp, shape3 in) {
    const int fan_in = sp.kind == layer_kind::conv ? in.c * sp.kh * sp.kw : in.size();
    return std::sqrt(2.0 / static_cast<double>(fan_in));
}

} // namespace

layer_spec layer_spec::conv2d(int out_c, int kh, int kw, int stride, int pad) {
    layer_spec s;
    s.kind = layer_kind::conv;
    s.out_channels = out_c;
    s.kh = kh;
    s.kw = kw;
    s.stride = stride;
    s.pad = pad;
    return s;
}

layer_spec layer_spec::relu() {
    layer_spec s;
    s.kind = layer_kind::relu;
    return s;
}

layer_spec layer_spec::maxpool(int window, int stride) {
    layer_spec s;
    s.kind = layer_kind::maxpool;
    s.window = window;
    s.pool_stride = stride > 0 ? stride : window;
    return s;
}

layer_spec layer_spec::flatten() {
    layer_spec s;
    s.kind = layer_kind::flatten;
    return s;
}

layer_spec layer_spec::dense(int out_dim) {
    layer_spec s;
    s.kind = layer_kind::dense;
    s.out_dim = out_dim;
    return s;
}

layer_spec layer_spec::sigmoid() {
    layer_spec s;
    s.kind = layer_kind::sigmoid;
    return s;
}

std::string layer_spec::describe() const {
    char buf[96];
    switch (kind) {
        case layer_kind::conv:
            std::snprintf(buf, sizeof buf, "conv out=%d k=%dx%d stride=%d pad=%d", out_channels,
                          kh, kw, stride, pad);
            return buf;
        case layer_kind::maxpool:
            std::snprintf(buf, sizeof buf, "maxpool window=%d stride=%d", window, pool_stride);
            return buf;
        case layer_kind::dense:
            std::snprintf(buf, sizeof buf, "dense out=%d", out_dim);
            return buf;
        case layer_kind::relu: return "relu";
        case layer_kind::flatten: return "flatten";
        case layer_kind::sigmoid: return "sigmoid";
    }
    return "?";
}

shape3 output_shape(const layer_spec& sp, shape3 in) {
    switch (sp.kind) {
        case layer_kind::conv: {
            require(sp.out_channels > 0 && sp.kh > 0 && sp.kw > 0 && sp.stride > 0 && sp.pad >= 0,
                    errc::invalid_argument, "conv: bad spec");
            int oh = (in.h + 2 * sp.pad - sp.kh) / sp.stride + 1;
            int ow = (in.w + 2 * sp.pad - sp.kw) / sp.stride + 1;
            require(in.h + 2 * sp.pad >= sp.kh && in.w + 2 * sp.pad >= sp.kw, errc::invalid_argument,
                    "conv: kernel larger than padded input");
            return {sp.out_channels, oh, ow};
        }
        case layer_kind::maxpool: {
            require(sp.window > 0 && sp.pool_stride > 0, errc::invalid_argument,
                    "maxpool: bad spec");
            require(in.h >= sp.window && in.w >= sp.window, errc::invalid_argument,
                    "maxpool: window larger than input");
            int oh = (in.h - sp.window) / sp.pool_stride + 1;
            int ow = (in.w - sp.window) / sp.pool_stride + 1;
            require(oh >= 2 && ow >= 2, errc::invalid_argument,
                    "maxpool: spatial collapse (output below 2x2)");
            return {in.c, oh, ow};
        }
        case layer_kind::relu: return in;
        case layer_kind::flatten: return flat(in.size());
        case layer_kind::dense:
            require(sp.out_dim > 0, errc::invalid_argument, "dense: bad spec");
            require(in.h == 1 && in.w == 1, errc::invalid_argument,
                    "dense: input must be flattened");
            return flat(sp.out_dim);
        case layer_kind::sigmoid: return in;
    }
    fail(errc::internal, "bad layer kind");
}

std::size_t network::parameter_count() const {
    std::size_t n = 0;
    for (const auto& p : params) n += p.weight.size() + p.bias.size();
    return n;
}

network build_network(std::vector<layer_spec> layers, shape3 input, std::uint64_t seed) {
    require(!layers.empty(), errc::invalid_argument, "empty layer list");
    require(input.c > 0 && input.h > 0 && input.w > 0, errc::invalid_argument,
            "bad input shape");
    require(layers.back().kind == layer_kind::sigmoid, errc::invalid_argument,
            "last layer must be sigmoid");

    network net;
    net.layers = std::move(layers);
    net.input = input;
    net.seed = seed;
    net.params.resize(net.layers.size());

    rng gen(seed);
    shape3 s = input;
    for (std::size_t i = 0; i < net.layers.size(); ++i) {
        const auto& sp = net.layers[i];
        shape3 so = output_shape(sp, s);
        if (sp.kind == layer_kind::conv) {
            const double sigma = he_sigma(sp, s);
            auto& p = net.params[i];
            p.weight.resize(static_cast<std::size_t>(sp.out_channels) *
                            static_cast<std::size_t>(s.c * sp.kh * sp.kw));
            p.bias.assign(static_cast<std::size_t>(sp.out_channels), 0.0f);
            for (auto& w : p.weight) w = static_cast<float>(gen.normal() * sigma);
        } else if (sp.kind == layer_kind::dense) {
            const double sigma = he_sigma(sp, s);
            auto& p = net.params[i];
            p.weight.resize(static_cast<std::size_t>(sp.out_dim) *
                            static_cast<std::size_t>(s.size()));
            p.bias.assign(static_cast<std::size_t>(sp.out_dim), 0.0f);
            for (auto& w : p.weight) w = static_cast<float>(gen.normal() * sigma);
        }
        s = so;
    }
    require(s.size() == 1, errc::invalid_argument, "network must end in a single probability");
    return net;
}

network build_reference_net(const std::string& kind, shape3 input, std::uint64_t seed) {
    std::vector<layer_spec> layers;
    if (kind == "shallow") {
        layers = {layer_spec::conv2d(8, 5, 5, 1, 2), layer_spec::relu(), layer_spec::maxpool(2),
                  layer_spec::flatten(), layer_spec::dense(1), layer_spec::sigmoid()};
    } else if (kind == "deep") {
        int ch[3] = {8, 16, 32};
        for (int c : ch) {
            layers.push_back(layer_spec::conv2d(c, 3, 3, 1, 1));
            layers.push_back(layer_spec::relu());
            layers.push_back(layer_spec::maxpool(2));
        }
        layers.push_back(layer_spec::flatten());
        layers.push_back(layer_spec::dense(32));
        layers.push_back(layer_spec::relu());
        layers.push_back(layer_spec::dense(1));
        layers.push_back(layer_spec::sigmoid());
    } else {
        fail(errc::invalid_argument, "unknown reference net '" + kind + "'");
    }
    return build_network(std::move(layers), input, seed);
}

namespace {

// runs one example through the network, recording everything backward needs
std::vector<tape_entry> run_forward(const network& net, const float* x,
                                    std::vector<shape3>* shapes_out) {
    std::vector<tape_entry> tape(net.layers.size());
    std::vector<shape3> shapes(net.layers.size() + 1);
    shapes[0] = net.input;

    std::vector<double> cur(static_cast<std::size_t>(net.input.size()));
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = static_cast<double>(x[i]);

    for (std::size_t li = 0; li < net.layers.size(); ++li) {
        const auto& sp = net.layers[li];
        shape3 is = shapes[li];
        shape3 os = output_shape(sp, is);
        shapes[li + 1] = os;
        auto& t = tape[li];
        switch (sp.kind) {
            case layer_kind::conv: conv_forward(sp, net.params[li], cur, is, os, t); break;
            case layer_kind::relu: {
                t.out = cur;
                for (auto& v : t.out) v = v > 0.0 ? v : 0.0;
                break;
            }
            case layer_kind::maxpool: pool_forward(sp, cur, is, os, t); break;
            case layer_kind::flatten: t.out = cur; break;
            case layer_kind::dense: {
                const auto& p = net.params[li];
                t.out.assign(static_cast<std::size_t>(sp.out_dim), 0.0);
                for (int o = 0; o < sp.out_dim; ++o) {
                    double acc = p.bias[static_cast<std::size_t>(o)];
                    const std::size_t row =
                        static_cast<std::size_t>(o) * static_cast<std::size_t>(is.size());
                    for (int j = 0; j < is.size(); ++j)
                        acc += static_cast<double>(p.weight[row + static_cast<std::size_t>(j)]) *
                               cur[static_cast<std::size_t>(j)];
                    t.out[static_cast<std::size_t>(o)] = acc;
                }
                break;
            }
            case layer_kind::sigmoid: {
                t.out = cur;
                for (auto& v : t.out) v = 1.0 / (1.0 + std::exp(-v));
                break;
            }
        }
        cur = t.out;
        for (double v : cur)
            require(std::isfinite(v), errc::data, "non-finite activation in layer " +
                                                      std::to_string(li) + " (" + sp.describe() +
                                                      ")");
    }
    if (shapes_out) *shapes_out = shapes;
    return tape;
}

} // namespace

std::vector<double> forward(const network& net, const examples& batch) {
    require(batch.shape == net.input, errc::invalid_argument, "batch shape mismatch");
    std::vector<double> probs(batch.count());
    for (std::size_t i = 0; i < batch.count(); ++i) {
        auto tape = run_forward(net, batch.example(i), nullptr);
        probs[i] = tape.back().out[0];
    }
    return probs;
}

std::vector<std::vector<double>> forward_activations(const network& net, const float* x) {
    auto tape = run_forward(net, x, nullptr);
    std::vector<std::vector<double>> out(tape.size());
    for (std::size_t i = 0; i < tape.size(); ++i) out[i] = tape[i].out;
    return out;
}

double loss(const std::vector<double>& probs, const std::vector<int>& labels) {
    require(probs.size() == labels.size(), errc::invalid_argument, "loss: size mismatch");
    require(!probs.empty(), errc::invalid_argument, "loss: empty batch");
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        require(labels[i] == 0 || labels[i] == 1, errc::invalid_argument,
                "loss: labels must be binary");
        double p = std::clamp(probs[i], PROB_CLAMP, 1.0 - PROB_CLAMP);
        acc += labels[i] == 1 ? -std::log(p) : -std::log1p(-p);
    }
    return acc / static_cast<double>(probs.size());
}

gradients backward(const network& net, const examples& batch, double* loss_out) {
    require(batch.shape == net.input, errc::invalid_argument, "batch shape mismatch");
    require(batch.count() > 0, errc::invalid_argument, "backward: empty batch");

    gradients g;
    g.weight.resize(net.layers.size());
    g.bias.resize(net.layers.size());
    for (std::size_t i = 0; i < net.layers.size(); ++i) {
        g.weight[i].assign(net.params[i].weight.size(), 0.0);
        g.bias[i].assign(net.params[i].bias.size(), 0.0);
    }

    const double inv_b = 1.0 / static_cast<double>(batch.count());
    double total_loss = 0.0;

    for (std::size_t ei = 0; ei < batch.count(); ++ei) {
        std::vector<shape3> shapes;
        auto tape = run_forward(net, batch.example(ei), &shapes);
        const double p = tape.back().out[0];
        const int y = batch.labels[ei];
        require(y == 0 || y == 1, errc::invalid_argument, "labels must be binary");
        const double pc = std::clamp(p, PROB_CLAMP, 1.0 - PROB_CLAMP);
        total_loss += (y == 1 ? -std::log(pc) : -std::log1p(-pc)) * inv_b;

        // dL/dp is zero where the clamp is active, matching loss() exactly
        double dLdp = 0.0;
        if (p > PROB_CLAMP && p < 1.0 - PROB_CLAMP)
            dLdp = (y == 1 ? -1.0 / p : 1.0 / (1.0 - p)) * inv_b;

        std::vector<double> grad{dLdp};
        for (std::size_t li = net.layers.size(); li-- > 0;) {
            const auto& sp = net.layers[li];
            const shape3 is = shapes[li], os = shapes[li + 1];
            const std::vector<double>* in_act = li == 0 ? nullptr : &tape[li - 1].out;
            auto input_at = [&](std::size_t j) {
                return in_act ? (*in_act)[j] : static_cast<double>(batch.example(ei)[j]);
            };

            std::vector<double> dprev;
            switch (sp.kind) {
                case layer_kind::sigmoid: {
                    dprev.resize(grad.size());
                    for (std::size_t j = 0; j < grad.size(); ++j) {
                        double s = tape[li].out[j];
                        dprev[j] = grad[j] * s * (1.0 - s);
                    }
                    break;
                }
                case layer_kind::dense: {
                    const auto& pr = net.params[li];
                    dprev.assign(static_cast<std::size_t>(is.size()), 0.0);
                    for (int o = 0; o < sp.out_dim; ++o) {
                        const double go = grad[static_cast<std::size_t>(o)];
                        g.bias[li][static_cast<std::size_t>(o)] += go;
                        const std::size_t row =
                            static_cast<std::size_t>(o) * static_cast<std::size_t>(is.size());
                        for (int j = 0; j < is.size(); ++j) {
                            g.weight[li][row + static_cast<std::size_t>(j)] +=
                                go * input_at(static_cast<std::size_t>(j));
                            dprev[static_cast<std::size_t>(j)] +=
                                go * static_cast<double>(
                                         pr.weight[row + static_cast<std::size_t>(j)]);
                        }
                    }
                    break;
                }
                case layer_kind::flatten: dprev = grad; break;
                case layer_kind::relu: {
                    dprev.resize(grad.size());
                    for (std::size_t j = 0; j < grad.size(); ++j)
                        dprev[j] = tape[li].out[j] > 0.0 ? grad[j] : 0.0;
                    break;
                }
                case layer_kind::maxpool: {
                    dprev.assign(static_cast<std::size_t>(is.size()), 0.0);
                    for (std::size_t o = 0; o < grad.size(); ++o)
                        dprev[static_cast<std::size_t>(tape[li].argmax[o])] += grad[o];
                    break;
                }
                case layer_kind::conv:
                    conv_backward(sp, net.params[li], tape[li], grad, is, os, dprev,
                                  g.weight[li], g.bias[li]);
                    break;
            }
            grad = std::move(dprev);
        }
    }

    if (loss_out) *loss_out = total_loss;
    return g;
}

prediction predict(const network& net, const examples& batch) {
    prediction out;
    out.probabilities = forward(net, batch);
    out.labels.resize(out.probabilities.size());
    for (std::size_t i = 0; i < out.labels.size(); ++i)
        out.labels[i] = out.probabilities[i] > 0.5 ? 1 : 0;  // exactly 0.5 -> 0
    return out;
}

train_report train(network& net, const examples& train_set, const examples& val_set,
                   const train_config& cfg) {
    require(train_set.count() > 0, errc::invalid_argument, "train: empty training set");
    require(cfg.epochs > 0 && cfg.batch_size > 0 && cfg.learning_rate > 0,
            errc::invalid_argument, "train: bad config");
    require(cfg.momentum >= 0.0 && cfg.momentum < 1.0, errc::invalid_argument,
            "train: momentum must be in [0, 1)");

    const auto t0 = std::chrono::steady_clock::now();
    train_report rep;

    std::vector<std::vector<double>> vel_w(net.layers.size()), vel_b(net.layers.size());
    for (std::size_t i = 0; i < net.layers.size(); ++i) {
        vel_w[i].assign(net.params[i].weight.size(), 0.0);
        vel_b[i].assign(net.params[i].bias.size(), 0.0);
    }

    std::vector<std::size_t> order(train_set.count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    double best_val = 1e300;
    int since_best = 0;
    std::vector<layer_params> best_params = net.params;
    const bool use_val = val_set.count() > 0;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng shuffle_gen(splitmix64(cfg.seed ^ (0x5e5ULL + static_cast<std::uint64_t>(epoch))));
        shuffle_gen.shuffle(order);

        double epoch_loss = 0.0;
        std::size_t batches = 0;
        auto run_batches = [&] {
            for (std::size_t start = 0; start < order.size();
                 start += static_cast<std::size_t>(cfg.batch_size)) {
                const std::size_t end =
                    std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
                examples mb;
                mb.shape = train_set.shape;
                mb.labels.reserve(end - start);
                mb.data.reserve((end - start) * static_cast<std::size_t>(mb.shape.size()));
                for (std::size_t i = start; i < end; ++i) {
                    const float* x = train_set.example(order[i]);
                    mb.data.insert(mb.data.end(), x, x + mb.shape.size());
                    mb.labels.push_back(train_set.labels[order[i]]);
                }

                double mb_loss = 0.0;
                auto grads = backward(net, mb, &mb_loss);
                epoch_loss += mb_loss;
                ++batches;

                for (std::size_t li = 0; li < net.layers.size(); ++li) {
                    auto& p = net.params[li];
                    auto step = [&](std::vector<float>& w, std::vector<double>& vel,
                                    const std::vector<double>& gr) {
                        for (std::size_t j = 0; j < w.size(); ++j) {
                            if (cfg.use_momentum) {
                                vel[j] = cfg.momentum * vel[j] - cfg.learning_rate * gr[j];
                                w[j] = static_cast<float>(static_cast<double>(w[j]) + vel[j]);
                            } else {
                                w[j] = static_cast<float>(static_cast<double>(w[j]) -
                                                          cfg.learning_rate * gr[j]);
                            }
                        }
                    };
                    step(p.weight, vel_w[li], grads.weight[li]);
                    step(p.bias, vel_b[li], grads.bias[li]);
                }
            }
        };
        try {
            run_batches();
        } catch (const error& e) {
            // exploding parameters surface as non-finite activations
            if (e.code() == errc::data)
                fail(errc::data, "training diverged at epoch " + std::to_string(epoch + 1) +
                                     ": " + e.what());
            throw;
        }

        epoch_loss /= static_cast<double>(batches);
        require(std::isfinite(epoch_loss), errc::data,
                "training diverged at epoch " + std::to_string(epoch + 1));
        rep.train_loss.push_back(epoch_loss);

        if (use_val) {
            auto probs = forward(net, val_set);
            double vl = loss(probs, val_set.labels);
            require(std::isfinite(vl), errc::data,
                    "validation loss diverged at epoch " + std::to_string(epoch + 1));
            std::size_t correct = 0;
            for (std::size_t i = 0; i < probs.size(); ++i)
                if ((probs[i] > 0.5 ? 1 : 0) == val_set.labels[i]) ++correct;
            rep.val_loss.push_back(vl);
            rep.val_accuracy.push_back(static_cast<double>(correct) /
                                       static_cast<double>(probs.size()));

            if (vl < best_val) {
                best_val = vl;
                best_params = net.params;
                rep.best_epoch = epoch;
                since_best = 0;
            } else if (++since_best >= cfg.early_stop_patience) {
                break;
            }
        } else {
            rep.best_epoch = epoch;
        }
    }

    if (use_val) net.params = best_params;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace ws::cnn
