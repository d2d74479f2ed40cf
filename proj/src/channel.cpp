#include "asced/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace asced {

ChannelPoint ChannelPoint::make(double ebn0_db, double rate) {
    if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("ChannelPoint: bad rate");
    ChannelPoint p;
    p.ebn0_db = ebn0_db;
    p.rate = rate;
    p.sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
    return p;
}

void SimConfig::validate() const {
    if (points.empty()) throw std::invalid_argument("SimConfig: no channel points");
    if (min_frame_errors < 1) throw std::invalid_argument("SimConfig: min_frame_errors must be >= 1");
    if (max_frames < min_frame_errors)
        throw std::invalid_argument("SimConfig: max_frames must be >= min_frame_errors");
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 frame_rng(std::uint64_t seed, std::size_t point_index, std::uint64_t frame) {
    std::uint64_t s = seed;
    splitmix64(s);
    s ^= 0x632be59bd9b4e019ULL * (point_index + 1);
    splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (frame + 1);
    return std::mt19937_64(splitmix64(s));
}

double gaussian(std::mt19937_64& rng) {
    // u1 in (0, 1], u2 in [0, 1)
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> transmit(const BitVector& x, const ChannelPoint& point,
                             std::mt19937_64& rng) {
    const double sigma = std::sqrt(point.sigma2);
    const double scale = 2.0 / point.sigma2;
    std::vector<double> llr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sym = x.get(i) ? -1.0 : 1.0;
        const double y = sym + sigma * gaussian(rng);
        llr[i] = scale * y;
    }
    return llr;
}

}  // namespace asced
