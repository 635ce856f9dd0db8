fn main() {
    println!("{}", ofdm_im_core::analysis::q_function(0.0));
}
