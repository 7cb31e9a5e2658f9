use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use symmetry_atlas::atomic::{address_to_z, build_table, z_to_address, ZMAX};
use symmetry_atlas::repcore::su3_su2_content;
use symmetry_atlas::{Layout, Su3Irrep};

fn tables(c: &mut Criterion) {
    for layout in Layout::ALL {
        c.bench_function(&format!("build_table {} {ZMAX}", layout.as_str()), |b| {
            b.iter(|| build_table(black_box(layout), black_box(ZMAX)).unwrap())
        });
    }
}

fn addresses(c: &mut Criterion) {
    c.bench_function("address round trip 1..=218", |b| {
        b.iter(|| {
            for z in 1..=ZMAX {
                assert_eq!(address_to_z(z_to_address(black_box(z)).unwrap()).unwrap(), z);
            }
        })
    });
}

fn su3(c: &mut Criterion) {
    for (p, q) in [(1, 1), (3, 0), (4, 4), (8, 5)] {
        c.bench_function(&format!("su3_su2_content ({p},{q})"), |b| {
            b.iter(|| su3_su2_content(black_box(Su3Irrep::new(p, q))))
        });
    }
}

criterion_group!(benches, tables, addresses, su3);
criterion_main!(benches);
