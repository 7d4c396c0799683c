//! Brute-force overpartition enumeration: list the overpartitions of a small
//! number, then tabulate the statistics the enumeration defines.
//!
//! ```bash
//! cargo run -p qsome --example overpartitions
//! ```

use qsome::partitions;

fn main() {
    let n = 4;
    println!("overpartitions of {n} (overline marks the first copy of a size):");
    let count = partitions::enumerate_overpartitions(n, |op| {
        println!("  {op}");
    });
    println!("count: {count}\n");

    println!(
        "{:>2} {:>6} {:>9} {:>7} {:>7}",
        "n", "pbar", "some_bar", "s_odd", "s_even"
    );
    for n in 0..=10u64 {
        let pbar = partitions::pbar_oracle(n);
        let some_bar = partitions::some_bar_oracle(n);
        let (s_odd, s_even) = partitions::sums_oracle(n);
        println!("{n:>2} {pbar:>6} {some_bar:>9} {s_odd:>7} {s_even:>7}");
    }
    println!();

    println!("sum of parts equal to b over the overpartitions of n:");
    println!("{:>2} {:>8} {:>8} {:>8}", "n", "S_1", "S_2", "S_3");
    for n in 1..=9u64 {
        let row: Vec<u64> = (1..=3).map(|b| partitions::s_b_oracle(b, n)).collect();
        println!("{n:>2} {:>8} {:>8} {:>8}", row[0], row[1], row[2]);
    }
    println!();

    // the formula route gives the same numbers without enumerating
    let pbar = partitions::overline_p_series(9);
    for b in 1..=3u64 {
        for n in 1..=9u64 {
            assert_eq!(
                partitions::s_b_formula_with(b, n, &pbar),
                partitions::s_b_oracle(b, n).into()
            );
        }
    }
    println!("formula route agrees with enumeration for b <= 3, n <= 9");
}
