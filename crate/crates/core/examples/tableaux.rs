//! Young tableaux, their arabic reading, and the crystal on row counts.

use geocrystal::gyt::{arabic_reading, tableau_rowcounts, tensor_e_pow, weyl_word, SharpElement, Tableau};

fn main() {
    let n = 2;
    let t = Tableau::new(n, vec![vec![1, 1, 1, 2, 2, 3], vec![2, 3, 3, 3]]).unwrap();
    let w = arabic_reading(&t);
    let v = tableau_rowcounts(&t, n);
    println!("reading word {:?}, row counts {v}", w.0);

    let raised = tensor_e_pow(2, 2, &w).unwrap();
    let back = Tableau::from_reading(n, t.shape(), &raised).unwrap();
    println!("e_2^2 on the word: {:?}", back.rows());
    assert_eq!(tableau_rowcounts(&back, n), v.etilde_pow(2, 2).unwrap());

    let free = SharpElement::from_vec(2, vec![-1, 4, 0]).unwrap();
    for i in 1..=2 {
        println!(
            "i = {i}: epsilon {}, phi {}, e {}, f {}",
            free.epsilon(i).unwrap(),
            free.phi(i).unwrap(),
            free.etilde(i).unwrap(),
            free.ftilde(i).unwrap()
        );
    }
    println!("s_1 s_2 s_1 v = {}", weyl_word(&[1, 2, 1], &free).unwrap());
    println!("s_2 s_1 s_2 v = {}", weyl_word(&[2, 1, 2], &free).unwrap());
}
