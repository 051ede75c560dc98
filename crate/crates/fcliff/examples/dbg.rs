fn main() {
    let report = fcliff::tapering::h2_demo(None).unwrap();
    println!("== 15 Pauli terms ==");
    for t in &report.pauli_terms {
        println!("  {:<14} {}", t.op, t.coeff);
    }
    println!("== transformed ==");
    for t in &report.transformed_terms {
        println!("  {:<14} {}", t.op, t.coeff);
    }
    println!("== sectors ==");
    for s in &report.sector_hamiltonians {
        print!("  {}: ", s.sector);
        for t in &s.terms {
            print!("[{}] {}  ", t.op, t.coeff);
        }
        println!();
    }
    println!("== tapered fermionic ({}) ==", report.rhf_sector);
    for t in &report.tapered_fermionic_terms {
        println!("  {:<10} {}", t.op, t.coeff);
    }
}
