// Build one filter, reuse it over several texts, and compare chain lengths.
#include <iostream>
#include <string_view>

#include "wfr/wfr.hpp"

int main() {
    using namespace std::string_view_literals;
    const auto pattern = wfr::as_bytes("needle"sv);
    const auto filter = wfr::preprocess(pattern, wfr::filter_params{});

    for (auto text : {"haystack with a needle"sv, "needle needle"sv, "nothing here"sv}) {
        const auto out = wfr::search(pattern, filter, wfr::as_bytes(text));
        std::cout << '"' << text << "\": " << out.occurrence_count() << " occurrence(s), "
                  << out.verification_count << " verification(s)\n";
    }

    const auto corpus = wfr::bench::synth_corpus(4, 1 << 20, 7);
    const auto sample = wfr::bench::sample_patterns(corpus, 64, 1, 7).front();
    for (unsigned k = 1; k <= 4; ++k) {
        const auto out = wfr::search(sample.bytes, corpus.bytes(), {}, {k});
        std::cout << "k=" << k << ": attempts=" << out.attempt_count
                  << " mean shift=" << out.mean_shift() << "\n";
    }
}
