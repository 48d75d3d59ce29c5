//! The fixed eigenstructure of the transfer matrix: binomial eigenvector
//! matrices independent of the stage prime, verified exactly.
//!
//! ```bash
//! cargo run --example eigenstructure
//! ```

use gapcycles::dynamics::{build_transfer_matrix, eigenstructure};

fn main() -> Result<(), gapcycles::Error> {
    let dim = 3;
    let eig = eigenstructure(dim)?;
    println!("R (right eigenvectors, alternating binomials):");
    print_matrix(&eig.right());
    println!("L (left eigenvectors, binomials):");
    print_matrix(&eig.left());

    let m = build_transfer_matrix(dim, 7)?;
    println!("M_3(7):");
    print_matrix(&m.to_matrix());
    println!("Lambda(7):");
    print_matrix(&eig.lambda(7)?);

    for p in [13u64, 17, 101, 997] {
        assert!(eig.verify(&[p])?, "identity failed at p = {p}");
    }
    println!("verified: L*R = I and R*Lambda(p)*L = M_3(p) for p in {{13, 17, 101, 997}}");

    let eig9 = eigenstructure(9)?;
    assert!(eig9.verify(&[17, 101])?);
    println!("verified the same identities at dimension 9");
    Ok(())
}

fn print_matrix(m: &gapcycles::dynamics::RationalMatrix) {
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
}
