#include "kronstab/lr.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace kronstab {

namespace {

struct Cell {
    int row;
    int col;
};

class SkewFiller {
  public:
    SkewFiller(const Partition &lambda, const Partition &mu, const Partition &nu) : mu_(mu) {
        const int rows = nu.length();
        grid_.resize(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            const int inner = lambda.at(r + 1);
            const int outer = nu.at(r + 1);
            grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer), 0);
            for (int c = outer - 1; c >= inner; --c)
                cells_.push_back({r, c});
            inner_.push_back(inner);
        }
        count_.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
    }

    std::uint64_t run() { return place(0); }

  private:
    std::uint64_t place(std::size_t k) {
        if (k == cells_.size())
            return 1;
        const auto [r, c] = cells_[k];
        auto &row = grid_[static_cast<std::size_t>(r)];
        int hi = std::min(mu_.length(), r + 1);
        if (c + 1 < static_cast<int>(row.size()))
            hi = std::min(hi, row[static_cast<std::size_t>(c + 1)]);
        int lo = 1;
        if (r > 0 && c >= inner_[static_cast<std::size_t>(r - 1)])
            lo = grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;
        std::uint64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            auto &cv = count_[static_cast<std::size_t>(v)];
            if (cv >= mu_.at(v))
                continue;
            if (v > 1 && cv + 1 > count_[static_cast<std::size_t>(v - 1)])
                continue;
            ++cv;
            row[static_cast<std::size_t>(c)] = v;
            total += place(k + 1);
            row[static_cast<std::size_t>(c)] = 0;
            --cv;
        }
        return total;
    }

    const Partition &mu_;
    std::vector<std::vector<int>> grid_;
    std::vector<Cell> cells_;
    std::vector<int> inner_;
    std::vector<int> count_;
};

} // namespace

mpz_class lr(const Partition &lambda, const Partition &mu, const Partition &nu) {
    if (lambda.size() + mu.size() != nu.size() || !contains(nu, lambda) || !contains(nu, mu))
        return 0;
    SkewFiller filler(lambda, mu, nu);
    return mpz_class(static_cast<unsigned long>(filler.run()));
}

namespace {

class StripExpander {
  public:
    StripExpander(const Partition &mu, std::map<Partition, mpz_class> &out) : mu_(mu), out_(out) {}

    // Adds the next letter to `shape`. prev[r] counts the previous letter in
    // row r.
    void expand(const std::vector<int> &shape, const std::vector<int> &prev, int letter) {
        if (letter == mu_.length()) {
            out_[Partition(shape)] += 1;
            return;
        }
        std::vector<int> padded = shape;
        padded.push_back(0);
        std::vector<int> cur(padded.size(), 0);
        strip(padded, prev, cur, 0, mu_[static_cast<std::size_t>(letter)], 0, 0, letter);
    }

  private:
    // Horizontal strip, row by row: row r may grow up to the old length of
    // row r-1. Lattice condition: the letter's cells in rows <= r never
    // outnumber the previous letter's cells in rows < r.
    void strip(const std::vector<int> &padded, const std::vector<int> &prev, std::vector<int> &cur,
               std::size_t row, int remaining, int prev_above, int cur_upto, int letter) {
        if (row == padded.size()) {
            if (remaining != 0)
                return;
            std::vector<int> shape(padded.size());
            for (std::size_t r = 0; r < padded.size(); ++r)
                shape[r] = padded[r] + cur[r];
            while (!shape.empty() && shape.back() == 0)
                shape.pop_back();
            expand(shape, cur, letter + 1);
            return;
        }
        const int cap = row == 0 ? remaining : std::min(remaining, padded[row - 1] - padded[row]);
        const int prev_here = row < prev.size() ? prev[row] : 0;
        for (int add = 0; add <= cap; ++add) {
            if (letter > 0 && cur_upto + add > prev_above)
                break;
            cur[row] = add;
            strip(padded, prev, cur, row + 1, remaining - add, prev_above + prev_here, cur_upto + add, letter);
        }
        cur[row] = 0;
    }

    const Partition &mu_;
    std::map<Partition, mpz_class> &out_;
};

} // namespace

std::map<Partition, mpz_class> schur_product_expand(const Partition &lambda, const Partition &mu) {
    std::map<Partition, mpz_class> out;
    StripExpander(mu, out).expand(std::vector<int>(lambda.parts().begin(), lambda.parts().end()), {}, 0);
    return out;
}

} // namespace kronstab
