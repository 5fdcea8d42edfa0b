// Exhaustive cross-check that the orbit search and the associated-variety
// computation classify every label identically, over all even-multiplicity
// shapes of a given size and all negation-closed entry multisets in a band.
#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "wtab/classifier.hpp"
#include "wtab/table_io.hpp"

namespace {

using namespace wtab;

// Partitions of n whose parts all occur an even number of times, i.e. doubled
// multiplicities of the partitions of n/2.
std::vector<Partition> even_multiplicity_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            std::vector<int> parts;
            for (int v : acc) {
                parts.push_back(v);
                parts.push_back(v);
            }
            out.push_back(make_partition(parts));
            return;
        }
        for (int v = std::min(left, max_part); v >= 1; --v) {
            acc.push_back(v);
            self(self, left - v, v);
            acc.pop_back();
        }
    };
    rec(rec, n / 2, n / 2);
    return out;
}

// Negation-closed multisets of the given size: `pairs` positive values drawn
// with repetition from `palette`, their negatives, and zeros for the rest
// (integral palettes only).
void add_characters(std::vector<CentralCharacter>& out, int size,
                    const std::vector<HalfInt>& palette, bool allow_zeros) {
    int max_pairs = size / 2;
    int min_pairs = allow_zeros ? 0 : max_pairs;
    std::vector<HalfInt> pos;
    auto rec = [&](auto&& self, int from, int want) -> void {
        if (want == 0) {
            CentralCharacter chi;
            for (HalfInt v : pos) {
                chi.push_back(v);
                chi.push_back(-v);
            }
            chi.resize(size, HalfInt(0));
            std::sort(chi.begin(), chi.end());
            out.push_back(std::move(chi));
            return;
        }
        for (int i = from; i < static_cast<int>(palette.size()); ++i) {
            pos.push_back(palette[i]);
            self(self, i, want - 1);
            pos.pop_back();
        }
    };
    for (int k = min_pairs; k <= max_pairs; ++k) rec(rec, 0, k);
}

struct Job {
    const Partition* p;
    const CentralCharacter* chi;
    LieType lt;
};

struct Mismatch {
    std::string table;
    bool orbit_route;
    bool bv_route;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"route-agreement sweep over shapes and entry multisets"};
    int boxes = 6;
    int max_entry = 4;
    std::string type = "both";
    std::string parity = "both";
    unsigned jobs = std::thread::hardware_concurrency();
    bool verbose = false;
    app.add_option("--boxes", boxes, "total box count (even)")->check(CLI::PositiveNumber);
    app.add_option("--max-entry", max_entry, "largest |entry| for integral multisets");
    app.add_option("--type", type, "C, D, or both");
    app.add_option("--parity", parity, "integral, half, or both (half applies to type D)");
    app.add_option("--jobs", jobs, "worker threads");
    app.add_flag("--verbose", verbose, "per-shape progress");
    CLI11_PARSE(app, argc, argv);

    if (boxes % 2 != 0) {
        std::cerr << "--boxes must be even\n";
        return 2;
    }
    if (jobs == 0) jobs = 1;

    std::vector<Partition> shapes = even_multiplicity_partitions(boxes);

    std::vector<HalfInt> whole, halves;
    for (int v = 1; v <= max_entry; ++v) whole.push_back(HalfInt(v));
    for (int t = 1; t <= 2 * max_entry - 1; t += 2) halves.push_back(HalfInt::from_twice(t));

    std::vector<CentralCharacter> chi_int, chi_half;
    if (parity != "half") add_characters(chi_int, boxes, whole, /*allow_zeros=*/true);
    if (parity != "integral") add_characters(chi_half, boxes, halves, /*allow_zeros=*/false);

    std::vector<Job> work;
    for (const Partition& p : shapes) {
        if (type != "D")
            for (const CentralCharacter& chi : chi_int) work.push_back({&p, &chi, LieType::C});
        if (type != "C") {
            for (const CentralCharacter& chi : chi_int) work.push_back({&p, &chi, LieType::D});
            for (const CentralCharacter& chi : chi_half) work.push_back({&p, &chi, LieType::D});
        }
    }

    std::atomic<size_t> next{0};
    std::atomic<long long> tables_seen{0};
    std::atomic<long long> finite_seen{0};
    std::mutex sink;
    std::vector<Mismatch> mismatches;
    auto t0 = std::chrono::steady_clock::now();

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            const Job& job = work[i];
            long long local = 0, local_fin = 0;
            std::vector<Mismatch> local_bad;
            for (const STable& A : enumerate_tables(*job.p, *job.chi, job.lt)) {
                ClassificationResult res = classify(A, *job.p, job.lt);
                ++local;
                if (res.finite_dimensional) ++local_fin;
                if (!res.routes_agree)
                    local_bad.push_back({format_table(A, TableStyle::json, job.lt, *job.p),
                                         res.finite_dimensional, res.bv_route});
            }
            tables_seen += local;
            finite_seen += local_fin;
            if (!local_bad.empty() || verbose) {
                std::lock_guard<std::mutex> lock(sink);
                for (Mismatch& m : local_bad) mismatches.push_back(std::move(m));
                if (verbose)
                    std::cerr << lie_type_name(job.lt) << " " << job.p->str() << " job " << i << "/"
                              << work.size() << " tables " << local << "\n";
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();

    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const Mismatch& m : mismatches)
        std::cout << "MISMATCH orbit=" << (m.orbit_route ? "finite" : "infinite")
                  << " bv=" << (m.bv_route ? "finite" : "infinite") << " " << m.table << "\n";
    std::cout << "shapes " << shapes.size() << ", characters "
              << chi_int.size() + chi_half.size() << ", jobs " << work.size() << ", tables "
              << tables_seen << " (" << finite_seen << " finite), mismatches " << mismatches.size()
              << ", " << secs << "s\n";
    return mismatches.empty() ? 0 : 1;
}
