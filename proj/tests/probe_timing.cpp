// Development probe: cost of a full analysis on random reduced point sets.
#include <chrono>
#include <iostream>
#include <random>

#include "klab/differents.hpp"
#include "klab/structure.hpp"

using namespace klab;
using clock_t_ = std::chrono::steady_clock;

static long ms(clock_t_::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock_t_::now() - t0).count();
}

int main(int argc, char**) {
    std::mt19937_64 rng(12345);
    for (FieldSpec field : {FieldSpec{0}, FieldSpec{32003}}) {
        for (int n : {2, 3}) {
            int s = n == 2 ? 8 : 7;
            std::uniform_int_distribution<long> coord(-5, 5);
            std::vector<ComponentInput> comps;
            std::set<std::vector<long>> seen;
            while ((int)comps.size() < s) {
                std::vector<long> raw;
                for (int i = 0; i < n; ++i) raw.push_back(coord(rng));
                if (!seen.insert(raw).second) continue;
                ComponentInput ci;
                std::vector<Scalar> pt{Scalar::one(field)};
                for (long v : raw) pt.push_back(Scalar::from_int(v, field));
                ci.point = std::move(pt);
                comps.push_back(std::move(ci));
            }
            auto t0 = clock_t_::now();
            Scheme scheme = Scheme::from_components(field, n, comps, BuildOptions{});
            long t_build = ms(t0);
            t0 = clock_t_::now();
            GradedIdealView kaehler = kaehler_different(scheme);
            long t_k = ms(t0);
            t0 = clock_t_::now();
            GradedIdealView noether = noether_different(scheme);
            long t_n = ms(t0);
            t0 = clock_t_::now();
            GradedEmbedding emb(scheme);
            ConductorProfile prof = conductor(emb);
            long t_c = ms(t0);
            t0 = clock_t_::now();
            InclusionCheck inc = different_inclusions(scheme, kaehler, noether);
            long t_i = ms(t0);
            std::cout << field.to_string() << " P^" << n << " s=" << s
                      << "  build " << t_build << "ms kaehler " << t_k << "ms (gens "
                      << kaehler.gens.size() << ") noether " << t_n << "ms (gens "
                      << noether.gens.size() << ") conductor " << t_c << "ms inclusions " << t_i
                      << "ms  [r=" << scheme.hilbert().r_x << " incl " << inc.kaehler_in_noether
                      << inc.noether_pow_in_kaehler << "]\n";
        }
    }
    return 0;
}
