from springer_zmodel.cli import main_exit

main_exit()
